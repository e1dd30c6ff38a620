#ifndef KRAWX_ERRORS_HPP
#define KRAWX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace krawx {

// Thrown when a formula is requested at parameters where one of its
// denominators vanishes (e.g. a rotation-matrix entry needed as a divisor
// is zero). Callers that can fall back to the representation oracle should
// catch this.
class SingularParameterError : public std::domain_error {
public:
  explicit SingularParameterError(const std::string& entry)
      : std::domain_error("singular parameter: " + entry + " vanishes"),
        entry_(entry) {}

  const std::string& entry() const noexcept { return entry_; }

private:
  std::string entry_;
};

} // namespace krawx

#endif
