#include "fixtures.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "ragweld/core/utf8.hpp"
#include "ragweld/ingest/summarizer.hpp"
#include "ragweld/providers/offline.hpp"
#include "ragweld/vindex/store.hpp"

namespace ragweld::testing {

namespace fs = std::filesystem;

CorpusItem make_item(std::string id, LanguageTag lang, Modality modality, std::string title,
                     std::string raw_text, const providers::Embedder& embedder) {
  static const ingest::HeadSentenceSummarizer summarizer;
  static const providers::TaggedTranslator translator;
  CorpusItem item;
  item.id = std::move(id);
  item.modality = modality;
  item.language = lang;
  item.title = std::move(title);
  item.source_uri = "https://example.org/" + item.id;
  if (modality != Modality::kText) {
    item.media_uri = "https://media.example.org/" + item.id +
                     (modality == Modality::kImage ? ".png" : ".mp4");
  }
  std::string summary = summarizer.summarize(raw_text, modality);
  if (!(lang == LanguageTag(Language::kEn))) summary = translator.translate(summary, lang, Language::kEn);
  item.index_summary_en = std::move(summary);
  item.raw_text = std::move(raw_text);
  item.embedding = embedder.embed(item.index_summary_en);
  return item;
}

const std::vector<SeedDoc>& seed_documents() {
  static const std::vector<SeedDoc> docs = {
      {"en", Modality::kText, "Asthma triggers",
       "Common asthma triggers include pollen, dust mites, smoke and cold air. Avoiding known "
       "triggers lowers the number of attacks. Keep a diary of when symptoms start."},
      {"en", Modality::kText, "Using an inhaler",
       "To use an inhaler correctly, shake it, breathe out fully, then press once while breathing "
       "in slowly. Hold your breath for ten seconds. Rinse your mouth after a steroid inhaler."},
      {"en", Modality::kText, "Peak flow",
       "A peak flow meter measures how fast you can blow air out. Record the best of three blows "
       "each morning. A falling reading can warn of an attack."},
      {"en", Modality::kText, "Exercise",
       "Exercise is good for people with asthma when symptoms are controlled. Warm up slowly and "
       "use a reliever inhaler before sport if your doctor advises it."},
      {"en", Modality::kText, "Children",
       "Children with asthma may cough at night or after play. Parents should share the action "
       "plan with the school."},
      {"en", Modality::kText, "During an attack",
       "During an asthma attack, sit upright and take slow steady breaths. Use the reliever "
       "inhaler every minute up to ten puffs. Call emergency services if there is no improvement."},
      {"en", Modality::kImage, "Spacer diagram",
       "A spacer attaches to the inhaler and holds the medicine so it can be breathed in slowly. "
       "Spacers help children and older adults."},
      {"en", Modality::kImage, "Action plan chart",
       "The asthma action plan uses green, yellow and red zones. Each zone lists the medicine to "
       "take and when to seek help."},
      {"en", Modality::kVideo, "Inhaler technique",
       "In this video a nurse shows each step of using an inhaler with a spacer."},
      {"en", Modality::kVideo, "Breathing exercises",
       "This video teaches breathing exercises that relax the chest and slow down breathing."},

      {"fr", Modality::kText, "Déclencheurs de l'asthme",
       "Les déclencheurs de l'asthme les plus courants sont le pollen, les acariens, la fumée et "
       "l'air froid. Éviter les déclencheurs connus réduit le nombre de crises."},
      {"fr", Modality::kText, "Utiliser un inhalateur",
       "Pour utiliser un inhalateur, secouez-le, expirez complètement, puis appuyez une fois en "
       "inspirant lentement. Retenez votre souffle pendant dix secondes."},
      {"fr", Modality::kText, "Débit de pointe",
       "Un débitmètre de pointe mesure la vitesse à laquelle vous soufflez. Notez le meilleur de "
       "trois essais chaque matin."},
      {"fr", Modality::kText, "Sport et asthme",
       "Le sport est bon pour les personnes asthmatiques quand les symptômes sont contrôlés. "
       "Échauffez-vous lentement avant l'effort."},
      {"fr", Modality::kText, "Les enfants",
       "Les enfants asthmatiques peuvent tousser la nuit ou après le jeu. Les parents doivent "
       "partager le plan d'action avec l'école."},
      {"fr", Modality::kText, "Pendant une crise",
       "Pendant une crise d'asthme, asseyez-vous bien droit et respirez lentement. Utilisez "
       "l'inhalateur de secours et appelez les urgences si rien ne s'améliore."},
      {"fr", Modality::kImage, "Schéma de la chambre d'inhalation",
       "La chambre d'inhalation se fixe sur l'inhalateur et retient le médicament pour qu'il soit "
       "inspiré lentement."},
      {"fr", Modality::kImage, "Plan d'action",
       "Le plan d'action de l'asthme utilise des zones verte, jaune et rouge. Chaque zone indique "
       "le médicament à prendre."},
      {"fr", Modality::kVideo, "Technique d'inhalation",
       "Dans cette vidéo, une infirmière montre chaque étape de l'utilisation d'un inhalateur."},
      {"fr", Modality::kVideo, "Exercices de respiration",
       "Cette vidéo enseigne des exercices de respiration qui détendent la poitrine."},

      {"ar", Modality::kText, "مسببات الربو",
       "من أكثر مسببات الربو شيوعا حبوب اللقاح وعث الغبار والدخان والهواء البارد. تجنب "
       "المسببات المعروفة يقلل عدد النوبات."},
      {"ar", Modality::kText, "استخدام جهاز الاستنشاق",
       "لاستخدام جهاز الاستنشاق رج الجهاز وأخرج الهواء بالكامل ثم اضغط مرة واحدة مع الشهيق "
       "ببطء. احبس أنفاسك لمدة عشر ثوان."},
      {"ar", Modality::kText, "مقياس ذروة التدفق",
       "يقيس جهاز ذروة التدفق سرعة إخراج الهواء من الرئتين. سجل أفضل نتيجة من ثلاث محاولات كل "
       "صباح."},
      {"ar", Modality::kText, "الرياضة والربو",
       "الرياضة مفيدة لمرضى الربو عندما تكون الأعراض تحت السيطرة. قم بالإحماء ببطء قبل "
       "التمرين."},
      {"ar", Modality::kText, "الأطفال والربو",
       "قد يسعل الأطفال المصابون بالربو في الليل أو بعد اللعب. يجب على الأهل مشاركة خطة العمل "
       "مع المدرسة."},
      {"ar", Modality::kText, "أثناء النوبة",
       "أثناء نوبة الربو اجلس منتصبا وتنفس ببطء. استخدم جهاز الاستنشاق الإسعافي واتصل بالطوارئ "
       "إذا لم تتحسن الحالة."},
      {"ar", Modality::kImage, "رسم حجرة الاستنشاق",
       "تثبت حجرة الاستنشاق على جهاز الاستنشاق وتحفظ الدواء حتى يستنشق ببطء."},
      {"ar", Modality::kImage, "خطة عمل الربو",
       "تستخدم خطة عمل الربو مناطق خضراء وصفراء وحمراء. تبين كل منطقة الدواء الذي يجب تناوله."},
      {"ar", Modality::kVideo, "طريقة الاستنشاق",
       "في هذا الفيديو تعرض ممرضة كل خطوة من خطوات استخدام جهاز الاستنشاق."},
      {"ar", Modality::kVideo, "تمارين التنفس",
       "يعلم هذا الفيديو تمارين التنفس التي تريح الصدر."},
  };
  return docs;
}

std::vector<CorpusItem> seeded_items(const providers::Embedder& embedder) {
  std::vector<CorpusItem> items;
  std::size_t line = 0;
  for (const SeedDoc& d : seed_documents()) {
    ++line;
    const LanguageTag lang = LanguageTag::parse(d.lang);
    char id[64];
    std::snprintf(id, sizeof id, "%s-%s-%04zu", d.lang, std::string(modality_name(d.modality)).c_str(), line);
    std::string sid = id;
    for (char& c : sid) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    items.push_back(make_item(sid, lang, d.modality, d.title, d.text, embedder));
  }
  return items;
}

std::shared_ptr<vindex::StoreRegistry> registry_from(const std::vector<CorpusItem>& items,
                                                     std::size_t dim) {
  std::map<StoreKey, std::shared_ptr<vindex::VectorStore>> stores;
  for (const CorpusItem& item : items) {
    const StoreKey key{item.language.code(), item.modality};
    auto& store = stores[key];
    if (!store) store = std::make_shared<vindex::VectorStore>(key, dim);
    store->append(item);
  }
  auto registry = std::make_shared<vindex::StoreRegistry>();
  for (auto& [key, store] : stores) {
    store->seal();
    registry->add(store);
  }
  return registry;
}

std::shared_ptr<vindex::StoreRegistry> seeded_registry(const providers::Embedder& embedder) {
  return registry_from(seeded_items(embedder), embedder.dim());
}

const std::vector<std::string>& golden_queries() {
  static const std::vector<std::string> queries = {
      "What are common asthma triggers?",
      "How do I use an inhaler correctly?",
      "Quels sont les déclencheurs de l'asthme ?",
      "Comment utiliser un inhalateur pendant une crise ?",
      "ما هي مسببات الربو؟",
      "كيف أستخدم جهاز الاستنشاق؟",
  };
  return queries;
}

namespace {

class WordMaker {
 public:
  explicit WordMaker(unsigned seed) : rng_(seed) {}

  std::string latin() {
    static constexpr std::string_view kC = "bdfgklmnprstvz";
    static constexpr std::string_view kV = "aeiou";
    for (;;) {
      std::string w;
      for (int s = 0; s < 3; ++s) {
        w.push_back(kC[pick(kC.size())]);
        w.push_back(kV[pick(kV.size())]);
      }
      w.push_back(kC[pick(kC.size())]);
      if (used_.insert(w).second) return w;
    }
  }

  std::string arabic() {
    static const char32_t kLetters[] = {U'ب', U'ت', U'ج', U'د', U'ر', U'ز', U'س', U'ش',
                                        U'ط', U'ف', U'ق', U'ك', U'ل', U'م', U'ن', U'ه'};
    for (;;) {
      std::string w;
      for (int i = 0; i < 5; ++i) utf8::append(w, kLetters[pick(std::size(kLetters))]);
      if (used_.insert(w).second) return w;
    }
  }

  std::string word(Language lang) { return lang == Language::kAr ? arabic() : latin(); }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937 rng_;
  std::set<std::string> used_;
};

}  // namespace

PlantedFaq planted_faq(LanguageTag lang, std::size_t n, const providers::Embedder& embedder,
                       unsigned seed) {
  WordMaker words(seed);
  PlantedFaq out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string w1 = words.word(lang.code()), w2 = words.word(lang.code());
    const std::string w3 = words.word(lang.code()), w4 = words.word(lang.code());
    std::string q, a;
    switch (lang.code()) {
      case Language::kFr:
        q = "à quoi sert le " + w1 + " " + w2 + " ?";
        a = "Le " + w1 + " " + w2 + " est un remède " + w3 +
            " qui aide la poitrine à se détendre quand le " + w4 + " est présent.";
        break;
      case Language::kAr:
        q = "ما هو استخدام " + w1 + " " + w2 + "؟";
        a = w1 + " " + w2 + " علاج " + w3 + " يساعد الصدر على الاسترخاء عند وجود " + w4 + ".";
        break;
      default:
        q = "what is " + w1 + " " + w2 + " used for?";
        a = "The " + w1 + " " + w2 + " is a " + w3 +
            " remedy that helps the chest relax when " + w4 + " is present.";
        break;
    }
    char id[32];
    std::snprintf(id, sizeof id, "%s-faq-%03zu", lang.iso().c_str(), i);
    evalkit::FaqPair pair;
    pair.id = id;
    pair.question = q;
    pair.reference_answer = a;
    pair.language = lang;
    pair.source = "synthetic";
    out.pairs.push_back(pair);
    out.chunks.push_back(make_item(pair.id + "-chunk", lang, Modality::kText, w1 + " " + w2, a, embedder));
  }
  return out;
}

TempDir::TempDir(const std::string& prefix) {
  static std::mt19937_64 rng{std::random_device{}()};
  for (;;) {
    path_ = fs::temp_directory_path() / (prefix + "-" + std::to_string(rng()));
    if (fs::create_directories(path_)) break;
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void write_file(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace ragweld::testing
