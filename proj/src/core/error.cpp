#include "ragweld/core/error.hpp"

namespace ragweld {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kEmptyInput: return "EMPTY_INPUT";
    case Errc::kProviderUnavailable: return "PROVIDER_UNAVAILABLE";
    case Errc::kSafetyRefusal: return "SAFETY_REFUSAL";
    case Errc::kUnsupportedPair: return "UNSUPPORTED_PAIR";
    case Errc::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case Errc::kZeroVector: return "ZERO_VECTOR";
    case Errc::kAlreadySealed: return "ALREADY_SEALED";
    case Errc::kNotSealed: return "NOT_SEALED";
    case Errc::kDuplicateId: return "DUPLICATE_ID";
    case Errc::kInvalidItem: return "INVALID_ITEM";
    case Errc::kNoStore: return "NO_STORE";
    case Errc::kIoFailure: return "IO_FAILURE";
    case Errc::kFormatVersionMismatch: return "FORMAT_VERSION_MISMATCH";
    case Errc::kChecksumMismatch: return "CHECKSUM_MISMATCH";
    case Errc::kCorruptFile: return "CORRUPT_FILE";
    case Errc::kEmptyBody: return "EMPTY_BODY";
    case Errc::kTemplateInvalid: return "TEMPLATE_INVALID";
    case Errc::kEmptyGeneration: return "EMPTY_GENERATION";
    case Errc::kEmptyAfterTokenization: return "EMPTY_AFTER_TOKENIZATION";
    case Errc::kLengthMismatch: return "LENGTH_MISMATCH";
    case Errc::kInvalidArgument: return "INVALID_ARGUMENT";
    case Errc::kInvalidConfig: return "INVALID_CONFIG";
  }
  return "UNKNOWN";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace ragweld
