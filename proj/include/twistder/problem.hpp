#ifndef TWISTDER_PROBLEM_HPP
#define TWISTDER_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistder/algebra.hpp"
#include "twistder/descent.hpp"
#include "twistder/extfield.hpp"

namespace twistder {

// Sectioned problem file:
//
//   [extension]
//   minpoly = s^2 - t
//   generator = s
//   automorphisms = ["s", "-s"]
//
//   [algebra]
//   n = 2
//   unit = ["1", "0"]
//   c[0][0] = ["1", "0"]
//   ...
//
//   [cocycle]
//   P_inv = [["1", "1"], ["s", "-s"]]
//
// Sections a command does not need may be omitted.  Structure constants
// default to zero for omitted c[i][j] rows is NOT allowed: every pair must be
// present.  All expressions follow the shared grammar.
struct ProblemFile {
    std::optional<ExtFieldPtr> extension;
    std::optional<QAlgebra> algebra;
    std::optional<EMatrix> p_inv;

    const ExtFieldPtr& require_extension() const;
    const QAlgebra& require_algebra() const;
    CocycleData require_cocycle() const;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile parse_problem_file(const std::string& path);

} // namespace twistder

#endif
