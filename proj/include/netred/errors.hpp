#ifndef NETRED_ERRORS_HPP
#define NETRED_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace netred {

enum class Errc {
  NonTotal,
  DanglingElement,
  OutOfDomain,
  OutOfCodomain,
  SpaceMismatch,
  Multivalued,
  TranscendentInput,
  SearchSpaceExceeded,
  CyclicNetwork,
  PartialAssignment,
  UnsupportedTopology,
  StalePair,
  EnumerationCapExceeded,
  SyntaxError,
  SchemaError,
  ValidationError,
  UsageError,
};

const char* errc_name(Errc c);

// A counterexample to single-valuedness: two domain elements u, u2 that
// collapse to the same w under M but produce distinct x, x2 through N∘T.
struct Witness {
  std::string w;
  std::string u;
  std::string u2;
  std::string x;
  std::string x2;

  bool operator==(const Witness&) const = default;
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Error(Errc code, std::string message, Witness witness)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const { return code_; }
  const std::optional<Witness>& witness() const { return witness_; }

private:
  Errc code_;
  std::optional<Witness> witness_;
};

}  // namespace netred

#endif
