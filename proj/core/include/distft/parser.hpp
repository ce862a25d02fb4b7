#pragma once

#include <string_view>

#include "distft/dist_expr.hpp"

namespace distft::dist {

// Parses the CLI expression grammar into a canonical DistExpr. The same
// grammar covers both sides; `side` fixes the variable letter (x or k) and
// the k-side image forms like "(ik)^(-1)". Raises ParseError carrying the
// byte offset and the expected-token set.
//
//   expr := ["-"] term ((" + "|" - "|"+"|"-") term)*
//   term := factor ("*" factor)*          (at most one primitive, last)
//   factor := rat ["i"] | "i" | "(" rat ("+"|"-") rat "i" ")"
//           | "pi" | "pi^(" rat ")" | "sqrt(" ("pi"|uint) ")" | prim
//   prim := "theta" ["(-x)"] | "sgn" | "delta" ["^(" uint ")"] ["@" rat]
//         | "x^" sexp ["*theta" ["(-x)"] | "*sgn"]
//         | "x^(" rat ")" ["*theta" ["(-x)"] | "*sgn"]
//         | "(ix)^(" rat ")" | "exp(" ["-"] "i" [rat] "x)"
//         | "fd(" rat ")" | "be(" rat ")"
//         | "csch(" [rat "*"] "pi)" | "coth(" [rat "*"] "pi)"
//   sexp := int | int "/2" ;  rat := ["-"] uint ["/" uint]
DistExpr parse_expr(std::string_view s, Side side);

}  // namespace distft::dist
