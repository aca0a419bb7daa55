#pragma once

// Initial conditions for the Green's-function recursion: the named cases and
// tabulated periodic data.
//
// Tabulated format: one sample per line, "x,re" or "x,re,im" (commas or
// whitespace). Lines starting with '#' and a non-numeric header line are
// skipped. x must be uniformly spaced and cover one period without repeating
// the endpoint, so the period is (number of samples) * spacing. Spacing may
// wobble by up to 0.1% of the mean step to allow for rounded x columns.

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "burgers/greens.hpp"

namespace burgers {

struct TabulatedInitialCondition {
  double x0 = 0.0;
  double period = 0.0;
  std::vector<std::complex<double>> samples;
};

/// Throws InputError on malformed rows, fewer than 4 samples, non-uniform x
/// or non-finite values.
TabulatedInitialCondition read_tabulated(std::istream& in);

/// Trigonometric interpolant of the samples, periodic with the table period.
greens::InitialCondition interpolant(const TabulatedInitialCondition& table);

/// "exp-iz" (e^{ix}) or "cos" (cos x); throws InputError otherwise.
greens::InitialCondition named_initial_condition(const std::string& name);

}  // namespace burgers
