#pragma once

#include <stdexcept>
#include <string>

namespace rdil {

// Malformed input file (ARFF/CSV/config syntax). Messages carry "file:line" context
// where the parser knows it.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a dataset, weight, or spec contract.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Training or an experiment cell cannot proceed (all-zero weights, a single
// effective class, an irreparably degenerate cross-validation fold, ...).
class DegenerateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace rdil
