#include "sylbase/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace sylbase::permgrp {

Perm::Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
            throw std::domain_error("Perm: images are not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm p(degree);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= degree || to < 0 || to >= degree)
                throw std::domain_error("Perm::from_cycles: point out of range");
            p.img_[static_cast<std::size_t>(from)] = to;
        }
    }
    return Perm(std::move(p.img_));  // revalidate
}

Perm Perm::operator*(const Perm& rhs) const {
    if (degree() != rhs.degree()) throw std::domain_error("Perm: degree mismatch in product");
    std::vector<int> out(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
        out[x] = rhs.img_[static_cast<std::size_t>(img_[x])];
    return Perm(std::move(out));
}

Perm Perm::inverse() const {
    std::vector<int> out(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) out[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
    return Perm(std::move(out));
}

Perm Perm::power(const Integer& e) const {
    if (e < 0) throw std::domain_error("Perm::power: negative exponent");
    Perm acc(degree());
    Perm base = *this;
    Integer k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Perm::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != static_cast<int>(x)) return false;
    return true;
}

Integer Perm::order() const {
    std::vector<char> seen(img_.size(), 0);
    Integer ord = 1;
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (seen[x]) continue;
        Integer len = 0;
        for (int y = static_cast<int>(x); !seen[static_cast<std::size_t>(y)];
             y = img_[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = 1;
            ++len;
        }
        ord = boost::multiprecision::lcm(ord, len);
    }
    return ord;
}

int Perm::first_moved_point() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != static_cast<int>(x)) return static_cast<int>(x);
    return -1;
}

std::size_t Perm::hash() const {
    std::size_t h = img_.size();
    for (int v : img_) h = h * 1000003u + static_cast<std::size_t>(v) + 0x9e3779b9u;
    return h;
}

}  // namespace sylbase::permgrp
