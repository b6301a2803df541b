#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vrmat/analysis.hpp"
#include "vrmat/ltmatrix.hpp"
#include "vrmat/poly.hpp"
#include "vrmat/seq.hpp"

namespace vrmat {

/// Outcome of probing a conjecture against concrete arrays. "supported"
/// means every instance passed and the stated closed form fit; "refuted"
/// means some instance failed (a counterexample is attached); "mixed"
/// covers everything in between (instances disagree, or the recurrence
/// holds but the stated closed form does not).
enum class ConjectureOutcome { supported, refuted, mixed };
std::string to_string(ConjectureOutcome o);

struct ConjectureInstance {
    std::string name;
    DetectionReport detection;
    std::string notes;
};

struct ConjectureReport {
    std::string id;
    std::string parameters;
    std::vector<ConjectureInstance> instances;
    ConjectureOutcome outcome = ConjectureOutcome::mixed;
    /// Index into instances of the decisive failure, when outcome is
    /// refuted (or when a mixed report has a failing instance).
    std::optional<std::size_t> counterexample;

    std::string to_json() const;
};

/// Probes the first conjecture: the array with unit first column and
///
///   a[r][k] = alpha * a[r-1][k-1] + alpha_seq(r-1) * a[r-1][k]
///
/// is claimed to be vertically recurrent. Runs general-mode weight
/// inference on the order-(n+1) array and compares the inferred weights
/// against two product closed forms: the ascending products
/// alpha * alpha_seq(1) * ... * alpha_seq(i), and the order-dependent
/// descending products alpha_seq(i) * ... * alpha_seq(n) as originally
/// stated. Pre: n >= 3.
ConjectureReport conjecture1_explore(const Integer& alpha, const Seq& alpha_seq, std::size_t n);

/// Probes the second conjecture ("the Catalan array is vertically
/// recurrent") on both standard readings of "Catalan array": (a) the
/// ballot triangle B(i,j) = C(i+j,j) * (i-j+1) / (i+1), and (b) the
/// admissible matrix for s = (1,2,2,...), whose first column is the
/// Catalan numbers. Both run general-mode inference at order n+1.
/// Pre: n >= 4.
ConjectureReport conjecture2_explore(std::size_t n);

/// Monic least-degree polynomial g over F_p with g(A) == 0 (mod p),
/// found as the first linear dependency among vec(I), vec(A), vec(A^2),
/// ... under Gaussian elimination over F_p. Coefficients are canonical
/// residues in [0, p). The result is re-verified by evaluating g(A) mod p
/// before returning. Throws domain_error unless p is prime (trial
/// division).
Poly minpoly_mod_p(const LTMatrix& a, long p);

/// True iff pascal(n)^p == identity (mod p). Throws domain_error unless
/// p is prime.
bool pascal_order_mod_p_check(std::size_t n, long p);

}  // namespace vrmat
