#include "vrmat/poly.hpp"

#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <utility>

namespace vrmat {

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Poly Poly::constant(Integer c) {
    return Poly({std::move(c)});
}

Poly Poly::indeterminate() {
    return Poly({Integer(0), Integer(1)});
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Integer Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer Poly::operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Integer> c(std::max(a.coeffs().size(), b.coeffs().size()), Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeff(i) + b.coeff(i);
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Integer> c(std::max(a.coeffs().size(), b.coeffs().size()), Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeff(i) - b.coeff(i);
    }
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    std::vector<Integer> c(a.coeffs().size() + b.coeffs().size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return Poly(std::move(c));
}

Poly scale_shift(const Poly& p, const Integer& c, std::size_t shift) {
    if (p.is_zero() || c == 0) {
        return Poly();
    }
    std::vector<Integer> out(p.coeffs().size() + shift, Integer(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        out[i + shift] = c * p.coeffs()[i];
    }
    return Poly(std::move(out));
}

std::string Poly::pretty() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        Integer mag = abs(c);
        if (out.empty()) {
            out += (c < 0) ? "-" : "";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        bool need_coeff = (mag != 1) || (k == 0);
        if (need_coeff) {
            out += mag.get_str();
        }
        if (k >= 1) {
            out += "x";
            if (k >= 2) {
                out += "^" + std::to_string(k);
            }
        }
    }
    return out;
}

std::string Poly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Integer& c : coeffs_) {
        arr.push_back(c.get_str());
    }
    return arr.dump();
}

Poly Poly::from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) {
        throw std::runtime_error("polynomial JSON must be an array of integer strings");
    }
    std::vector<Integer> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string()) {
            throw std::runtime_error("polynomial JSON must contain decimal strings");
        }
        coeffs.emplace_back(item.get<std::string>());
    }
    return Poly(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.pretty();
}

}  // namespace vrmat
