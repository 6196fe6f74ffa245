#include "kloos/cyclotomic.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kloos {

CyclotomicInteger::CyclotomicInteger(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("Z[zeta_p] requires prime p, got " + std::to_string(p));
    coords_.assign(p - 1, BigInt(0));
}

CyclotomicInteger::CyclotomicInteger(std::uint32_t p, std::vector<BigInt> coords) : CyclotomicInteger(p) {
    if (coords.size() != p - 1) throw std::invalid_argument("coordinate vector must have length p - 1");
    coords_ = std::move(coords);
}

CyclotomicInteger CyclotomicInteger::integer(std::uint32_t p, const BigInt& value) {
    CyclotomicInteger z(p);
    z.coords_[0] = value;
    return z;
}

CyclotomicInteger CyclotomicInteger::zeta_power(std::uint32_t p, std::uint64_t k) {
    std::vector<BigInt> full(p, BigInt(0));
    full[k % p] = 1;
    return reduce(p, std::move(full));
}

CyclotomicInteger CyclotomicInteger::reduce(std::uint32_t p, std::vector<BigInt> full) {
    CyclotomicInteger z(p);
    for (std::uint32_t k = 0; k + 1 < p; ++k) z.coords_[k] = full[k] - full[p - 1];
    return z;
}

CyclotomicInteger CyclotomicInteger::from_exponent_counts(std::uint32_t p, std::span<const BigInt> counts) {
    if (counts.size() != p) throw std::invalid_argument("exponent counts must have length p");
    return reduce(p, std::vector<BigInt>(counts.begin(), counts.end()));
}

CyclotomicInteger CyclotomicInteger::from_exponent_counts(std::uint32_t p, std::span<const std::uint64_t> counts) {
    if (counts.size() != p) throw std::invalid_argument("exponent counts must have length p");
    std::vector<BigInt> full;
    full.reserve(p);
    for (auto c : counts) full.emplace_back(static_cast<unsigned long>(c));
    return reduce(p, std::move(full));
}

void CyclotomicInteger::require_same_ring(const CyclotomicInteger& other) const {
    if (p_ != other.p_) throw std::domain_error("cyclotomic operands live in different rings");
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
    require_same_ring(other);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
    return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& other) {
    require_same_ring(other);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
    return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const CyclotomicInteger& other) {
    require_same_ring(other);
    std::vector<BigInt> full(p_, BigInt(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coords_.size(); ++j) {
            if (other.coords_[j] == 0) continue;
            full[(i + j) % p_] += coords_[i] * other.coords_[j];
        }
    }
    *this = reduce(p_, std::move(full));
    return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const BigInt& scalar) {
    for (auto& c : coords_) c *= scalar;
    return *this;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
    CyclotomicInteger out(*this);
    for (auto& c : out.coords_) c = -c;
    return out;
}

bool operator<(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

bool CyclotomicInteger::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return c == 0; });
}

CyclotomicInteger CyclotomicInteger::galois_apply(std::uint64_t j) const {
    if (j % p_ == 0) throw std::invalid_argument("automorphism index must be a unit mod p");
    std::vector<BigInt> full(p_, BigInt(0));
    for (std::size_t k = 0; k < coords_.size(); ++k) full[(k * (j % p_)) % p_] += coords_[k];
    return reduce(p_, std::move(full));
}

std::optional<BigInt> CyclotomicInteger::as_rational_integer() const {
    for (std::size_t k = 1; k < coords_.size(); ++k) {
        if (coords_[k] != 0) return std::nullopt;
    }
    return coords_[0];
}

std::uint64_t CyclotomicInteger::lambda_residue() const {
    BigInt sum = 0;
    for (const auto& c : coords_) sum += c;
    return mod_u(sum, p_);
}

std::vector<std::complex<double>> CyclotomicInteger::complex_embeddings() const {
    std::vector<std::complex<double>> out;
    out.reserve(p_ - 1);
    for (std::uint32_t j = 1; j < p_; ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < coords_.size(); ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % p_) / p_;
            acc += coords_[k].get_d() * std::polar(1.0, angle);
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace kloos
