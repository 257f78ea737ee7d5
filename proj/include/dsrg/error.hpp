#pragma once

#include <stdexcept>
#include <string>

namespace dsrg {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched orders, ragged block layouts, non-binary sums.
class dimension_error : public error {
 public:
  using error::error;
};

// Malformed arguments: bad residues, loops, non-involutions.
class input_error : public error {
 public:
  using error::error;
};

// A well-formed input that a construction refuses (non-regular tournament,
// t != mu for the Kronecker expansion, asymmetric PQ, ...).
class construction_error : public error {
 public:
  using error::error;
};

// Search or enumeration requested above its configured size limit.
class bound_error : public error {
 public:
  using error::error;
};

}  // namespace dsrg
