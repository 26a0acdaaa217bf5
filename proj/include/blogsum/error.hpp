#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace blogsum {

enum class ErrorKind {
  MalformedInput,
  MissingTitle,
  EmptyBody,
  EmptyTermset,
  NoSentences,
  IndexOutOfRange,
  InvalidK,
  UndefinedMetric,
  EmptyModelSummary,
  InvalidConfig,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::MissingTitle: return "MissingTitle";
    case ErrorKind::EmptyBody: return "EmptyBody";
    case ErrorKind::EmptyTermset: return "EmptyTermset";
    case ErrorKind::NoSentences: return "NoSentences";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::UndefinedMetric: return "UndefinedMetric";
    case ErrorKind::EmptyModelSummary: return "EmptyModelSummary";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can report it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail, std::string source_id = {})
      : std::runtime_error(format(kind, detail, source_id)),
        kind_(kind),
        detail_(detail),
        source_id_(std::move(source_id)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::string& source_id() const noexcept { return source_id_; }

  /// Same error attributed to `source_id`, unless it already names one.
  Error with_source(std::string source_id) const {
    if (!source_id_.empty()) return *this;
    return Error(kind_, detail_, std::move(source_id));
  }

 private:
  static std::string format(ErrorKind kind, const std::string& detail, const std::string& source_id) {
    std::string out(to_string(kind));
    out += ": ";
    if (!source_id.empty()) out += source_id + ": ";
    return out + detail;
  }

  ErrorKind kind_;
  std::string detail_;
  std::string source_id_;
};

}  // namespace blogsum
