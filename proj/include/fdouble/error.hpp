// Error type shared by every fdouble module.

#ifndef FDOUBLE_ERROR_HPP_
#define FDOUBLE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdouble {

  enum class ErrorKind {
    malformed_input,
    rank_mismatch,
    infinite_index,
    resource_limit,
    not_in_subgroup,
    not_normal,
    not_contained,
    index_too_small,
    rank_too_small,
    relator_violated
  };

  constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::malformed_input:
        return "MalformedInput";
      case ErrorKind::rank_mismatch:
        return "RankMismatch";
      case ErrorKind::infinite_index:
        return "InfiniteIndex";
      case ErrorKind::resource_limit:
        return "ResourceLimit";
      case ErrorKind::not_in_subgroup:
        return "NotInSubgroup";
      case ErrorKind::not_normal:
        return "NotNormal";
      case ErrorKind::not_contained:
        return "NotContained";
      case ErrorKind::index_too_small:
        return "IndexTooSmall";
      case ErrorKind::rank_too_small:
        return "RankTooSmall";
      case ErrorKind::relator_violated:
        return "RelatorViolated";
    }
    return "Unknown";
  }

  //! Thrown by every operation that rejects its input. The kind is stable and
  //! is what the command line maps onto exit codes.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace fdouble

#endif  // FDOUBLE_ERROR_HPP_
