#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ragweld {

enum class Errc {
  kEmptyInput,
  kProviderUnavailable,
  kSafetyRefusal,
  kUnsupportedPair,
  kDimensionMismatch,
  kZeroVector,
  kAlreadySealed,
  kNotSealed,
  kDuplicateId,
  kInvalidItem,
  kNoStore,
  kIoFailure,
  kFormatVersionMismatch,
  kChecksumMismatch,
  kCorruptFile,
  kEmptyBody,
  kTemplateInvalid,
  kEmptyGeneration,
  kEmptyAfterTokenization,
  kLengthMismatch,
  kInvalidArgument,
  kInvalidConfig,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ragweld
