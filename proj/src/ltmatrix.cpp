#include "vrmat/ltmatrix.hpp"

#include <json.hpp>

#include <cctype>
#include <ostream>
#include <utility>

namespace vrmat {

namespace {

bool is_decimal_integer(const std::string& s) {
    std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

LTMatrix::LTMatrix(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw std::invalid_argument("matrix needs at least one row");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != i + 1) {
            throw std::invalid_argument("row " + std::to_string(i) + " must have " +
                                        std::to_string(i + 1) + " entries, found " +
                                        std::to_string(rows_[i].size()));
        }
    }
}

LTMatrix LTMatrix::identity(std::size_t order) {
    std::vector<std::vector<Integer>> rows(order);
    for (std::size_t i = 0; i < order; ++i) {
        rows[i].assign(i + 1, Integer(0));
        rows[i][i] = 1;
    }
    return LTMatrix(std::move(rows));
}

Integer LTMatrix::entry(std::size_t i, std::size_t j) const {
    if (i >= order() || j >= order()) {
        throw std::out_of_range("matrix index out of range");
    }
    return j <= i ? rows_[i][j] : Integer(0);
}

const Integer& LTMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= order() || j > i) {
        throw std::out_of_range("matrix index out of range");
    }
    return rows_[i][j];
}

Integer& LTMatrix::at(std::size_t i, std::size_t j) {
    if (i >= order() || j > i) {
        throw std::out_of_range("matrix index out of range");
    }
    return rows_[i][j];
}

std::vector<Integer> LTMatrix::first_column() const {
    std::vector<Integer> col;
    col.reserve(order());
    for (const auto& row : rows_) {
        col.push_back(row.front());
    }
    return col;
}

LTMatrix operator*(const LTMatrix& a, const LTMatrix& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("matrix order mismatch: " +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
    }
    std::size_t n = a.order();
    std::vector<std::vector<Integer>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].assign(i + 1, Integer(0));
        for (std::size_t j = 0; j <= i; ++j) {
            Integer acc = 0;
            for (std::size_t l = j; l <= i; ++l) {
                acc += a.at(i, l) * b.at(l, j);
            }
            rows[i][j] = acc;
        }
    }
    return LTMatrix(std::move(rows));
}

LTMatrix LTMatrix::pow(unsigned long m) const {
    LTMatrix result = identity(order());
    LTMatrix base = *this;
    while (m > 0) {
        if (m & 1UL) {
            result = result * base;
        }
        m >>= 1UL;
        if (m > 0) {
            base = base * base;
        }
    }
    return result;
}

LTMatrix LTMatrix::inverse() const {
    std::size_t n = order();
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& d = rows_[i][i];
        if (d != 1 && d != -1) {
            throw std::domain_error("no integer inverse: diagonal entry (" +
                                    std::to_string(i) + ", " + std::to_string(i) +
                                    ") is " + d.get_str());
        }
    }
    // Forward substitution column by column; diagonal entries are self-inverse.
    std::vector<std::vector<Integer>> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        inv[i].assign(i + 1, Integer(0));
    }
    for (std::size_t j = 0; j < n; ++j) {
        inv[j][j] = rows_[j][j];
        for (std::size_t i = j + 1; i < n; ++i) {
            Integer acc = 0;
            for (std::size_t l = j; l < i; ++l) {
                acc += rows_[i][l] * inv[l][j];
            }
            inv[i][j] = -rows_[i][i] * acc;
        }
    }
    return LTMatrix(std::move(inv));
}

LTMatrix direct_sum_1(const LTMatrix& a) {
    std::vector<std::vector<Integer>> rows(a.order() + 1);
    rows[0] = {Integer(1)};
    for (std::size_t i = 0; i < a.order(); ++i) {
        rows[i + 1].reserve(i + 2);
        rows[i + 1].push_back(Integer(0));
        for (std::size_t j = 0; j <= i; ++j) {
            rows[i + 1].push_back(a.at(i, j));
        }
    }
    return LTMatrix(std::move(rows));
}

std::string LTMatrix::to_json() const {
    nlohmann::json doc;
    doc["order"] = order();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rows_) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const Integer& e : row) {
            jrow.push_back(e.get_str());
        }
        rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    return doc.dump();
}

LTMatrix LTMatrix::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonSchemaError("$", std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw JsonSchemaError("$", "expected an object with 'order' and 'rows'");
    }
    if (!doc.contains("order") || !doc["order"].is_number_unsigned()) {
        throw JsonSchemaError("order", "expected a nonnegative integer");
    }
    if (!doc.contains("rows") || !doc["rows"].is_array()) {
        throw JsonSchemaError("rows", "expected an array of rows");
    }
    std::size_t order = doc["order"].get<std::size_t>();
    if (order == 0) {
        throw JsonSchemaError("order", "order must be at least 1");
    }
    const auto& jrows = doc["rows"];
    if (jrows.size() != order) {
        throw JsonSchemaError("rows", "expected " + std::to_string(order) +
                                          " rows, found " + std::to_string(jrows.size()));
    }
    std::vector<std::vector<Integer>> rows(order);
    for (std::size_t i = 0; i < order; ++i) {
        const auto& jrow = jrows[i];
        std::string path = "rows[" + std::to_string(i) + "]";
        if (!jrow.is_array()) {
            throw JsonSchemaError(path, "expected an array of entries");
        }
        if (jrow.size() != i + 1) {
            throw JsonSchemaError(path, "expected " + std::to_string(i + 1) +
                                            " entries, found " +
                                            std::to_string(jrow.size()));
        }
        rows[i].reserve(i + 1);
        for (std::size_t j = 0; j < jrow.size(); ++j) {
            std::string epath = path + "[" + std::to_string(j) + "]";
            if (!jrow[j].is_string()) {
                throw JsonSchemaError(epath, "expected a decimal string");
            }
            std::string s = jrow[j].get<std::string>();
            if (!is_decimal_integer(s)) {
                throw JsonSchemaError(epath, "'" + s + "' is not a decimal integer");
            }
            rows[i].emplace_back(s);
        }
    }
    return LTMatrix(std::move(rows));
}

std::string LTMatrix::to_csv() const {
    std::string out;
    for (const auto& row : rows_) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) {
                out += ",";
            }
            out += row[j].get_str();
        }
        out += "\n";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LTMatrix& a) {
    os << "[";
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (i > 0) {
            os << "; ";
        }
        for (std::size_t j = 0; j <= i; ++j) {
            if (j > 0) {
                os << " ";
            }
            os << a.at(i, j);
        }
    }
    return os << "]";
}

}  // namespace vrmat
