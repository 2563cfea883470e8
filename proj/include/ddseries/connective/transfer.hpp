#pragma once

#include <json.hpp>

#include <vector>

#include "ddseries/exact/rational.hpp"

namespace ddseries::connective {

using exact::BigInt;

// Memory-tau walks as a finite transition system. A state is the last
// tau - 1 steps up to signed permutations of the axes (axes relabelled in
// order of first use, first use positive); entry (S, S') counts the steps
// that extend a walk ending in shape S to one ending in shape S'.
struct TransferSystem {
  int d = 0;
  int tau = 0;
  std::vector<std::vector<int>> states;       // canonical step sequences, direction 2*axis (+) or 2*axis+1 (-)
  std::vector<std::vector<long>> matrix;      // matrix[S][S']
  std::vector<BigInt> initial;                // walks of length tau - 1 per state
};

// 2 <= tau <= 8.
TransferSystem build_transfer(int d, int tau);

// Exact counts c_1 .. c_{n_max} from the transfer system.
std::vector<BigInt> transfer_counts(const TransferSystem& system, int n_max);

struct TransferResult {
  int d = 0;
  int tau = 0;
  int states = 0;
  double eigenvalue = 0;
  double residual = 0;  // |lambda_k - lambda_{k-1}| / lambda_k at exit
  int iterations = 0;
  std::vector<double> trace;                   // eigenvalue estimates every 100 iterations
  std::vector<BigInt> characteristic;          // det(x I - M), x^0 first; empty above 40 states
};

// Dominant eigenvalue by power iteration to 1e-12 relative (at most 1e5
// iterations, ConvergenceError with the trace otherwise).
TransferResult mu_tau_transfer(int d, int tau);

nlohmann::json to_json(const TransferResult& r);

}  // namespace ddseries::connective
