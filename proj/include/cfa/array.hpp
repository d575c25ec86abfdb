#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfa {

// Error taxonomy shared by the whole library. CLI maps ValueError/ShapeError/
// ParseError to exit code 2 and DivergedError to exit code 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

// Invalid parameters, malformed arguments, infeasible configs.
class ValueError : public Error {
public:
    explicit ValueError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class DivergedError : public Error {
public:
    explicit DivergedError(const std::string& msg) : Error(msg) {}
};

// Finite-difference oracle failures (non-finite objective at a probe point).
class OracleError : public Error {
public:
    explicit OracleError(const std::string& msg) : Error(msg) {}
};

/// Dense row-major array of 64-bit reals. Rank 0 (scalar), 1 and 2 are the
/// only ranks the library produces.
struct Array {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Array() = default;
    Array(std::vector<std::size_t> s, std::vector<double> d)
        : shape(std::move(s)), data(std::move(d)) {
        if (data.size() != numel_of(shape))
            throw ShapeError("Array: data length " + std::to_string(data.size()) +
                             " does not match shape " + shape_str(shape));
    }

    static std::size_t numel_of(const std::vector<std::size_t>& s) {
        std::size_t n = 1;
        for (std::size_t d : s) n *= d;
        return n;
    }

    static Array scalar(double v) { return Array({}, {v}); }

    static Array zeros(std::vector<std::size_t> s) {
        std::size_t n = numel_of(s);
        return Array(std::move(s), std::vector<double>(n, 0.0));
    }

    static Array full(std::vector<std::size_t> s, double v) {
        std::size_t n = numel_of(s);
        return Array(std::move(s), std::vector<double>(n, v));
    }

    std::size_t rank() const { return shape.size(); }
    std::size_t numel() const { return data.size(); }

    std::size_t rows() const {
        if (rank() != 2) throw ShapeError("rows(): rank-2 required, got " + shape_str(shape));
        return shape[0];
    }
    std::size_t cols() const {
        if (rank() != 2) throw ShapeError("cols(): rank-2 required, got " + shape_str(shape));
        return shape[1];
    }

    double& at(std::size_t i, std::size_t j) { return data[i * shape[1] + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * shape[1] + j]; }

    bool same_shape(const Array& o) const { return shape == o.shape; }

    static std::string shape_str(const std::vector<std::size_t>& s) {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) os << 'x';
            os << s[i];
        }
        os << ']';
        return os.str();
    }
    std::string shape_str() const { return shape_str(shape); }
};

inline bool all_finite(const Array& a) {
    for (double v : a.data)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace cfa
