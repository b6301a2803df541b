#include "vrmat/seq.hpp"

#include <utility>

namespace vrmat {

Seq::Seq(SeqKind kind, Integer param, std::vector<Integer> values)
    : kind_(kind), param_(std::move(param)), values_(std::move(values)) {}

Seq Seq::ones() {
    return Seq(SeqKind::ones, 0, {});
}

Seq Seq::constant(Integer c) {
    return Seq(SeqKind::constant, std::move(c), {});
}

Seq Seq::geometric(Integer r) {
    return Seq(SeqKind::geometric, std::move(r), {});
}

Seq Seq::binomial(Integer c) {
    return Seq(SeqKind::binomial, std::move(c), {});
}

Seq Seq::catalan() {
    return Seq(SeqKind::catalan, 0, {});
}

Seq Seq::list(std::vector<Integer> values) {
    if (values.empty()) {
        throw std::invalid_argument("list sequence needs at least one value");
    }
    return Seq(SeqKind::list, 0, std::move(values));
}

Integer Seq::term(std::size_t n) const {
    switch (kind_) {
        case SeqKind::ones:
            return 1;
        case SeqKind::constant:
            return param_;
        case SeqKind::geometric:
            return ipow(param_, static_cast<unsigned long>(n));
        case SeqKind::binomial:
            if (param_ < 0) {
                return 0;  // negative lower index
            }
            if (!param_.fits_ulong_p()) {
                throw std::domain_error("binomial family parameter too large");
            }
            return binom(static_cast<unsigned long>(n + param_.get_ui()),
                         static_cast<long>(param_.get_ui()));
        case SeqKind::catalan:
            return vrmat::catalan(static_cast<unsigned long>(n));
        case SeqKind::list:
            if (n >= values_.size()) {
                throw SeqExhausted("sequence exhausted: term " + std::to_string(n) +
                                   " of a " + std::to_string(values_.size()) +
                                   "-term list");
            }
            return values_[n];
    }
    throw std::logic_error("unreachable sequence kind");
}

std::vector<Integer> Seq::terms(std::size_t count) const {
    std::vector<Integer> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        out.push_back(term(n));
    }
    return out;
}

std::string Seq::to_spec() const {
    switch (kind_) {
        case SeqKind::ones:
            return "ones";
        case SeqKind::constant:
            return "const:" + param_.get_str();
        case SeqKind::geometric:
            return "geom:" + param_.get_str();
        case SeqKind::binomial:
            return "binom:" + param_.get_str();
        case SeqKind::catalan:
            return "catalan";
        case SeqKind::list: {
            std::string out = "list:";
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (i > 0) {
                    out += ",";
                }
                out += values_[i].get_str();
            }
            return out;
        }
    }
    throw std::logic_error("unreachable sequence kind");
}

namespace {

// Reads one signed decimal integer starting at pos; advances pos.
Integer read_int(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') {
        ++pos;
    }
    std::size_t digits_from = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        ++pos;
    }
    if (pos == digits_from) {
        throw SeqParseError(pos, "expected an integer");
    }
    return Integer(text.substr(start, pos - start));
}

}  // namespace

Seq parse_seqspec(const std::string& text) {
    std::size_t colon = text.find(':');
    std::string family = text.substr(0, colon == std::string::npos ? text.size() : colon);

    if (family == "ones" || family == "nat" || family == "catalan") {
        if (colon != std::string::npos) {
            throw SeqParseError(colon, "'" + family + "' takes no parameter");
        }
        if (family == "ones") {
            return Seq::ones();
        }
        if (family == "nat") {
            return Seq::binomial(1);  // C(n+1, 1) = n + 1
        }
        return Seq::catalan();
    }

    if (family == "const" || family == "geom" || family == "binom") {
        if (colon == std::string::npos) {
            throw SeqParseError(text.size(), "expected ':' and a parameter after '" +
                                                 family + "'");
        }
        std::size_t pos = colon + 1;
        Integer param = read_int(text, pos);
        if (pos != text.size()) {
            throw SeqParseError(pos, std::string("unexpected '") + text[pos] +
                                         "' (single parameter expected)");
        }
        if (family == "const") {
            return Seq::constant(param);
        }
        if (family == "geom") {
            return Seq::geometric(param);
        }
        return Seq::binomial(param);
    }

    if (family == "list") {
        if (colon == std::string::npos) {
            throw SeqParseError(text.size(), "expected ':' and values after 'list'");
        }
        std::size_t pos = colon + 1;
        std::vector<Integer> values;
        values.push_back(read_int(text, pos));
        while (pos < text.size()) {
            if (text[pos] != ',') {
                throw SeqParseError(pos, std::string("unexpected '") + text[pos] + "'");
            }
            ++pos;
            values.push_back(read_int(text, pos));
        }
        return Seq::list(std::move(values));
    }

    throw SeqParseError(0, "unknown sequence family '" + family + "'");
}

std::vector<Integer> conv_inverse(const Seq& s, std::size_t count) {
    Integer s0 = s.term(0);
    if (s0 != 1 && s0 != -1) {
        throw std::domain_error("sequence is not invertible over the integers: "
                                "leading term " + s0.get_str() + " is not 1 or -1");
    }
    std::vector<Integer> mu;
    mu.reserve(count);
    if (count == 0) {
        return mu;
    }
    mu.push_back(s0);  // 1/s0 == s0 for s0 = +-1
    for (std::size_t n = 1; n < count; ++n) {
        Integer acc = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            acc += s.term(j) * mu[n - j];
        }
        mu.push_back(-s0 * acc);
    }
    return mu;
}

Integer geom_sum(const Integer& lambda, unsigned long m) {
    if (m < 1) {
        throw std::invalid_argument("geometric sum needs m >= 1");
    }
    Integer acc = 0;
    Integer pow = 1;
    for (unsigned long j = 0; j < m; ++j) {
        acc += pow;
        pow *= lambda;
    }
    return acc;
}

}  // namespace vrmat
