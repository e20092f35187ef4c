#pragma once

#include <stdexcept>
#include <string>

namespace simplex_nodes
{

/// Failure categories raised by the library. The CLI maps these onto exit
/// codes (see tools/).
enum class ErrorKind
{
  invalid_argument,   ///< bad parameters (order, dimension, alpha < 0, ...)
  no_convergence,     ///< an iteration failed to converge
  outside_simplex,    ///< a point lies outside the reference simplex
  singular_matrix,    ///< degenerate node set
  invalid_node,       ///< warp pushed a node outside the simplex
  index_out_of_bounds,
  parse_error,
};

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), _kind(kind)
  {
  }

  ErrorKind kind() const noexcept { return _kind; }

private:
  ErrorKind _kind;
};

} // namespace simplex_nodes
