#include "minksym/shape_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minksym {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string expect_field(std::istream& is, const std::string& key) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("shape file: truncated, expected " + key);
    auto eq = line.find('=');
    if (eq == std::string::npos || line.substr(0, eq) != key)
        throw std::runtime_error("shape file: expected '" + key + "=', got '" + line + "'");
    return line.substr(eq + 1);
}

std::vector<double> read_values(std::istream& is, int count) {
    std::vector<double> v;
    v.reserve(count);
    std::string line;
    while (static_cast<int>(v.size()) < count && std::getline(is, line)) {
        if (line.empty()) continue;
        v.push_back(std::stod(line));
    }
    if (static_cast<int>(v.size()) != count) throw std::runtime_error("shape file: value count mismatch");
    return v;
}

}  // namespace

void write_shape(std::ostream& os, const StarBody2D& K) {
    os << "dim=2\ntype=radial\nm=" << K.m << '\n';
    for (double v : K.r) os << fmt17(v) << '\n';
}

void write_shape(std::ostream& os, const SupportBody& H) {
    os << "dim=" << H.n << "\ntype=support\ncloud=";
    switch (H.cloud.kind) {
        case CloudKind::Grid2D: os << "grid:"; break;
        case CloudKind::Fibonacci3D: os << "fib:"; break;
        case CloudKind::MonteCarlo: os << "mc:"; break;
    }
    os << H.cloud.size() << '\n';
    for (double v : H.h) os << fmt17(v) << '\n';
}

Shape read_shape(std::istream& is) {
    int dim = std::stoi(expect_field(is, "dim"));
    std::string type = expect_field(is, "type");
    if (type == "radial") {
        if (dim != 2) throw std::runtime_error("shape file: radial requires dim=2");
        int m = std::stoi(expect_field(is, "m"));
        return make_star(m, read_values(is, m));
    }
    if (type == "support") {
        std::string cloud = expect_field(is, "cloud");
        auto colon = cloud.find(':');
        if (colon == std::string::npos) throw std::runtime_error("shape file: bad cloud spec");
        std::string kind = cloud.substr(0, colon);
        int M = std::stoi(cloud.substr(colon + 1));
        SupportBody H;
        H.n = dim;
        if (kind == "grid") {
            if (dim != 2) throw std::runtime_error("shape file: grid cloud requires dim=2");
            H.cloud = sphere_quadrature(2, M);
        } else if (kind == "fib") {
            if (dim != 3) throw std::runtime_error("shape file: fib cloud requires dim=3");
            H.cloud = sphere_quadrature(3, M);
        } else if (kind == "mc") {
            if (dim < 4) throw std::runtime_error("shape file: mc cloud requires dim>=4");
            H.cloud = sphere_quadrature(dim, M);
        } else {
            throw std::runtime_error("shape file: unknown cloud kind '" + kind + "'");
        }
        H.h = read_values(is, M);
        return H;
    }
    throw std::runtime_error("shape file: unknown type '" + type + "'");
}

void save_shape(const std::string& path, const Shape& s) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    std::visit([&](const auto& b) { write_shape(os, b); }, s);
}

Shape load_shape(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_shape(is);
}

}  // namespace minksym
