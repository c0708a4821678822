#ifndef FCA_ERROR_HPP
#define FCA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fca {

enum class Errc {
  DuplicateName,
  MalformedCell,
  RaggedRow,
  MissingName,
  InvalidName,
  MissingHeader,
  BadIndex,
  BadId,
  MixedContext,
  EmptyCategory,
  UnknownName,
  MalformedJson,
};

inline std::string_view to_string(Errc e) {
  switch (e) {
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::MalformedCell: return "MalformedCell";
    case Errc::RaggedRow: return "RaggedRow";
    case Errc::MissingName: return "MissingName";
    case Errc::InvalidName: return "InvalidName";
    case Errc::MissingHeader: return "MissingHeader";
    case Errc::BadIndex: return "BadIndex";
    case Errc::BadId: return "BadId";
    case Errc::MixedContext: return "MixedContext";
    case Errc::EmptyCategory: return "EmptyCategory";
    case Errc::UnknownName: return "UnknownName";
    case Errc::MalformedJson: return "MalformedJson";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Failure while reading a context file. Row and column are 1-based file
/// coordinates; 0 means "not applicable".
class ParseError : public Error {
public:
  ParseError(Errc code, const std::string& what, std::size_t row = 0, std::size_t column = 0)
      : Error(code, located(what, row, column)), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string located(const std::string& what, std::size_t row, std::size_t column) {
    if (row == 0)
      return what;
    std::string s = what + " (line " + std::to_string(row);
    if (column != 0)
      s += ", column " + std::to_string(column);
    return s + ")";
  }

  std::size_t row_;
  std::size_t column_;
};

}  // namespace fca

#endif  // FCA_ERROR_HPP
