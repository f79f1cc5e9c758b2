#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdiff {

/// Immutable lower-triangular table: row n holds entries for k = 0..n.
///
/// Rows are supplied whole at construction and validated for shape; there is
/// no mutating access afterwards, so a built table can be shared freely.
template <typename T>
class Triangle {
public:
    using value_type = T;
    using Params = std::map<std::string, std::string>;

    Triangle() = default;

    Triangle(std::string name, Params params, std::vector<std::vector<T>> rows)
        : name_(std::move(name)), params_(std::move(params)), rows_(std::move(rows)) {
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            if (rows_[n].size() != n + 1) {
                throw std::invalid_argument("Triangle '" + name_ + "': row " + std::to_string(n) +
                                            " has " + std::to_string(rows_[n].size()) +
                                            " entries, expected " + std::to_string(n + 1));
            }
        }
    }

    const std::string& name() const { return name_; }
    const Params& params() const { return params_; }

    /// Number of rows; the largest valid n is rows() - 1.
    std::size_t rows() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    const std::vector<T>& row(std::size_t n) const {
        if (n >= rows_.size()) throw std::out_of_range(index_message(n, 0));
        return rows_[n];
    }

    const T& at(std::size_t n, std::size_t k) const {
        if (n >= rows_.size() || k > n) throw std::out_of_range(index_message(n, k));
        return rows_[n][k];
    }

    const T& operator()(std::size_t n, std::size_t k) const { return at(n, k); }

    friend bool operator==(const Triangle& a, const Triangle& b) { return a.rows_ == b.rows_; }

private:
    std::string index_message(std::size_t n, std::size_t k) const {
        return "Triangle '" + name_ + "': index (" + std::to_string(n) + ", " + std::to_string(k) +
               ") outside " + std::to_string(rows_.size()) + " rows";
    }

    std::string name_;
    Params params_;
    std::vector<std::vector<T>> rows_;
};

}  // namespace cdiff
