#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lirg/aut.hpp"

namespace lirg {

/// Text formats shared by the CLI. Every file starts with a '#' header line
/// carrying n, p, m and the modulus coefficients (constant term first).
///
/// Permutation file:
///   # lirg-permutation n=2 p=2 m=1 modulus=1,1 directed=true vertices=16
///   0 0
///   1 5
///   ...                (one "v image" line per vertex, ascending v)
///
/// Decomposition report (f = phi(P) . upsilon(t) . sigma, sigma acting first):
///   # lirg-decomposition n=3 p=2 m=1 modulus=1,1 directed=true vertices=512
///   P
///   <matrix>
///   t 0
///   sigma 2            (number of classes with a nontrivial cycle)
///   ideal 1            (rank, then that many basis rows)
///   1 0 1
///   cycles (3 7 5) (9 11)
///   ...
///   end
///
/// Matrix: the line "n", then n rows of element codes separated by spaces.

void write_matrix(std::ostream& os, const Matrix& x);
/// Throws ParseError on malformed input or codes outside the field.
Matrix read_matrix(std::istream& is, FieldPtr field);

void write_ideal(std::ostream& os, const LeftIdeal& ideal);
LeftIdeal read_ideal(std::istream& is, FieldPtr field, int n);

struct RingHeader {
  std::string kind;  // "lirg-permutation", "lirg-decomposition", ...
  int n = 0;
  FieldPtr field;
  bool directed = true;
  std::uint64_t vertices = 0;
};

/// "# <kind> n=.. p=.. m=.. modulus=.. directed=.. vertices=.."
std::string ring_header(std::string_view kind, int n, const Field& field);
/// Parses a header line (with or without the trailing newline). Throws
/// ParseError when a key is missing, the field is invalid or vertices does
/// not equal q^(n^2).
RingHeader parse_ring_header(std::string_view line);

std::string format_permutation(const Automorphism& f);
Automorphism parse_permutation(std::string_view text);

std::string format_decomposition(const Decomposition& d, const RelationGraph& g);
/// Rebuilds sigma from the cycle lists. Every cycle must stay inside the
/// ideal it is listed under; otherwise ParseError.
Decomposition parse_decomposition(std::string_view text);

}  // namespace lirg
