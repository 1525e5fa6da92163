#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "ragweld/core/error.hpp"
#include "ragweld/core/serialize.hpp"
#include "ragweld/evalkit/report.hpp"
#include "ragweld/evalkit/runner.hpp"
#include "ragweld/ingest/builder.hpp"
#include "ragweld/ingest/manifest.hpp"
#include "ragweld/ingest/summarizer.hpp"
#include "ragweld/providers/factory.hpp"
#include "ragweld/service/config.hpp"
#include "ragweld/service/http_server.hpp"
#include "ragweld/vindex/persist.hpp"

namespace fs = std::filesystem;
using namespace ragweld;

namespace {

service::ServiceConfig config_from(const std::string& cli_path) {
  std::optional<fs::path> given;
  if (!cli_path.empty()) given = cli_path;
  service::ServiceConfig cfg;
  if (auto path = service::resolve_config_path(given)) cfg = service::load_service_config(*path);
  cfg.apply_env();
  cfg.validate();
  return cfg;
}

ingest::IngestProviders ingest_providers(const providers::ProviderSettings& settings) {
  providers::ProviderSet set = providers::make_providers(settings);
  ingest::IngestProviders p;
  if (settings.generator.mode == providers::ProviderMode::kHttp) {
    p.summarizer = std::make_shared<ingest::GeneratorSummarizer>(set.generator);
  } else {
    p.summarizer = std::make_shared<ingest::HeadSentenceSummarizer>();
  }
  p.translator = set.translator;
  p.embedder = set.embedder;
  return p;
}

std::shared_ptr<const vindex::StoreRegistry> load_stores(const fs::path& dir) {
  return std::make_shared<const vindex::StoreRegistry>(vindex::load_registry(dir));
}

int cmd_ingest(const std::string& manifest_path, const std::string& out, const std::string& config,
               std::optional<std::int64_t> built_at, const std::string& report_path) {
  service::ServiceConfig cfg = config_from(config);
  if (built_at) cfg.ingest.built_at = *built_at;
  const ingest::Manifest manifest = ingest::load_manifest(manifest_path);
  ingest::BuildResult result =
      ingest::build_corpus(manifest, cfg.ingest, ingest_providers(cfg.providers));
  const nlohmann::json report = ingest::to_json(result.report);
  if (!report_path.empty()) std::ofstream(report_path) << report.dump(2) << '\n';
  std::cout << report.dump(2) << '\n';
  if (!result.report.passed) {
    std::cerr << "ingest failed: failure rate " << result.report.failure_rate << " exceeds "
              << result.report.max_failure_rate << '\n';
    return 2;
  }
  vindex::save_registry(result.registry, out.empty() ? cfg.store_dir : fs::path(out));
  return 0;
}

service::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(const std::string& config) {
  service::ServiceConfig cfg = config_from(config);
  auto service = std::make_shared<service::ChatService>(
      cfg, load_stores(cfg.store_dir), providers::make_providers(cfg.providers));
  if (!cfg.datasets_dir.empty()) service->register_datasets_in(cfg.datasets_dir);
  service::HttpServer server(service);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  const int port = server.bind(cfg.bind_address, cfg.port);
  std::cerr << "listening on " << cfg.bind_address << ":" << port << std::endl;
  server.listen();
  g_server = nullptr;
  return 0;
}

int cmd_eval(const std::string& dataset, const std::string& arm, const std::string& lang,
             const std::string& mode, const std::string& stores, const std::string& config,
             const std::string& variant, bool as_json) {
  service::ServiceConfig cfg = config_from(config);
  if (!variant.empty()) cfg.providers.generator.variant = variant;
  cfg.validate();
  evalkit::EvalSetting setting;
  setting.arm = evalkit::parse_eval_arm(arm);
  setting.query_mode = evalkit::parse_query_mode(mode);
  setting.language = LanguageTag::parse(lang);

  std::vector<evalkit::FaqPair> pairs = evalkit::load_faq(dataset, setting.language);
  std::erase_if(pairs, [&](const evalkit::FaqPair& p) { return !(p.language == setting.language); });
  if (pairs.empty()) throw Error(Errc::kInvalidArgument, "no " + lang + " pairs in " + dataset);

  pipeline::Pipeline pipe(load_stores(stores.empty() ? cfg.store_dir : fs::path(stores)),
                          providers::make_providers(cfg.providers));
  const evalkit::EvalReport report = evalkit::run_eval(pairs, pipe, cfg.pipeline, setting);
  if (as_json) {
    std::cout << evalkit::to_json(report).dump(2) << '\n';
  } else {
    std::cout << evalkit::format_table(std::span(&report, 1));
  }
  return 0;
}

int cmd_chat(const std::string& stores, const std::string& config) {
  service::ServiceConfig cfg = config_from(config);
  pipeline::Pipeline pipe(load_stores(stores.empty() ? cfg.store_dir : fs::path(stores)),
                          providers::make_providers(cfg.providers));
  ChatSession session;
  session.session_id = "repl";
  session.created_at_us = now_us();
  std::string line;
  while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
    if (line == ":quit" || line == ":q") break;
    if (line.empty()) continue;
    try {
      const MultiModalAnswer a = pipe.answer(session, line, cfg.pipeline);
      std::cout << a.text << '\n';
      for (Modality m : kAllModalities) {
        for (const RetrievedItem& r : a.for_modality(m)) {
          std::cout << "  [" << modality_name(m) << " " << r.score << "] " << r.item->title << " <"
                    << r.item->media_uri.value_or(r.item->source_uri) << ">\n";
        }
      }
    } catch (const pipeline::StageError& e) {
      std::cout << "error at " << pipeline::stage_name(e.stage()) << ": " << e.what() << '\n';
    } catch (const Error& e) {
      std::cout << "error: " << e.what() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ragweld: multilingual multimodal retrieval-augmented chat"};
  app.require_subcommand(1);

  std::string config;

  std::string manifest, out, report_path;
  std::optional<std::int64_t> built_at;
  auto* ingest_cmd = app.add_subcommand("ingest", "build vector stores from a manifest");
  ingest_cmd->add_option("manifest", manifest, "JSON Lines manifest")->required();
  ingest_cmd->add_option("--out", out, "output store directory (default from config)");
  ingest_cmd->add_option("--built-at", built_at, "timestamp written into store headers");
  ingest_cmd->add_option("--report", report_path, "write the build report here");
  ingest_cmd->add_option("--config", config, "config file");

  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP service");
  serve_cmd->add_option("--config", config, "config file");

  std::string dataset, arm = "text", lang = "en", mode = "tq", stores, variant;
  bool as_json = false;
  auto* eval_cmd = app.add_subcommand("eval", "score a FAQ set");
  eval_cmd->add_option("dataset", dataset, "FAQ file (.jsonl or .csv)")->required();
  eval_cmd->add_option("--arm", arm)->check(CLI::IsMember({"text", "image", "video", "norag"}));
  eval_cmd->add_option("--lang", lang)->check(CLI::IsMember({"en", "fr", "ar"}));
  eval_cmd->add_option("--mode", mode)->check(CLI::IsMember({"tq", "nq"}));
  eval_cmd->add_option("--stores", stores, "store directory (default from config)");
  eval_cmd->add_option("--generator", variant, "offline generator variant")
      ->check(CLI::IsMember({"extractive", "echo"}));
  eval_cmd->add_flag("--json", as_json, "print the report as JSON");
  eval_cmd->add_option("--config", config, "config file");

  auto* chat_cmd = app.add_subcommand("chat", "interactive session on stdin");
  chat_cmd->add_option("--stores", stores, "store directory (default from config)");
  chat_cmd->add_option("--config", config, "config file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest_cmd) return cmd_ingest(manifest, out, config, built_at, report_path);
    if (*serve_cmd) return cmd_serve(config);
    if (*eval_cmd) return cmd_eval(dataset, arm, lang, mode, stores, config, variant, as_json);
    if (*chat_cmd) return cmd_chat(stores, config);
  } catch (const std::exception& e) {
    std::cerr << "ragweld: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
