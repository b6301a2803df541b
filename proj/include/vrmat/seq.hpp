#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vrmat/kernel.hpp"

namespace vrmat {

/// Thrown when a finite list sequence is read past its last term.
class SeqExhausted : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Malformed sequence spec text; offset() is the byte position of the error.
class SeqParseError : public std::runtime_error {
public:
    SeqParseError(std::size_t offset, const std::string& message)
        : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

enum class SeqKind { ones, constant, geometric, binomial, catalan, list };

/// Weight sequence families. All families are total except list, which
/// throws SeqExhausted past its last value.
///
///   ones       1, 1, 1, ...
///   constant c c, c, c, ...
///   geometric r  r^n
///   binomial c   C(n + c, c)       ("nat" is binomial 1: 1, 2, 3, ...)
///   catalan      1, 1, 2, 5, 14, ...
///   list v0,v1,...,vk  explicit finite values
class Seq {
public:
    static Seq ones();
    static Seq constant(Integer c);
    static Seq geometric(Integer r);
    static Seq binomial(Integer c);
    static Seq catalan();
    static Seq list(std::vector<Integer> values);

    SeqKind kind() const { return kind_; }
    const Integer& parameter() const { return param_; }
    const std::vector<Integer>& values() const { return values_; }

    Integer term(std::size_t n) const;
    /// term(0), ..., term(count - 1).
    std::vector<Integer> terms(std::size_t count) const;

    /// Canonical spec text; parse_seqspec(to_spec()) reproduces the sequence.
    std::string to_spec() const;

    bool operator==(const Seq&) const = default;

private:
    Seq(SeqKind kind, Integer param, std::vector<Integer> values);

    SeqKind kind_;
    Integer param_;
    std::vector<Integer> values_;
};

/// Parses "ones" | "nat" | "catalan" | "const:INT" | "geom:INT" |
/// "binom:INT" | "list:INT(,INT)*". No whitespace anywhere; INT is an
/// optional minus sign followed by decimal digits. "nat" is sugar for
/// "binom:1". Throws SeqParseError with the offending byte offset.
Seq parse_seqspec(const std::string& text);

/// First `count` coefficients of the multiplicative inverse of the power
/// series with coefficients s: sum_j s(j) * mu(n - j) == [n == 0].
/// Pre: s.term(0) is 1 or -1 (throws std::domain_error otherwise).
std::vector<Integer> conv_inverse(const Seq& s, std::size_t count);

/// 1 + lambda + ... + lambda^(m-1). Pre: m >= 1.
Integer geom_sum(const Integer& lambda, unsigned long m);

}  // namespace vrmat
