#include <qtri/algebra.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qtri
{

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid = [](const std::string &part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        return i < part.size() && std::all_of(part.begin() + static_cast<long>(i), part.end(), [](char c) {
                   return c >= '0' && c <= '9';
               });
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') {
        num.erase(0, 1);
    }
    if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    Integer d(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator: '" + s + "'");
    }
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Poly::Poly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

Poly Poly::constant(const Rational &c)
{
    return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(const Rational &c, std::size_t degree)
{
    if (c == 0) {
        return {};
    }
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

Rational Poly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Poly Poly::shifted(std::size_t k) const
{
    if (is_zero() || k == 0) {
        return *this;
    }
    Poly out;
    out.coeffs_.assign(k, Rational(0));
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Poly &Poly::operator+=(const Poly &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

Poly &Poly::operator-=(const Poly &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

Poly operator*(const Poly &lhs, const Poly &rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly &Poly::operator*=(const Poly &other)
{
    *this = *this * other;
    return *this;
}

Poly &Poly::operator*=(const Rational &scalar)
{
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto &c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

std::string Poly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational &c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << qtri::to_string(mag);
        }
        if (i >= 1) {
            os << 'q';
        }
        if (i >= 2) {
            os << '^' << i;
        }
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Poly &p)
{
    return os << p.to_string();
}

Poly poly_arith(const Poly &f, const Poly &g, PolyOp op)
{
    switch (op) {
    case PolyOp::add:
        return f + g;
    case PolyOp::sub:
        return f - g;
    case PolyOp::mul:
        return f * g;
    }
    return {};
}

QOrderResult nonnegative_coeffs(const Poly &d)
{
    const auto &c = d.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0) {
            return {false, i, c[i]};
        }
    }
    return {};
}

QOrderResult poly_geq_q(const Poly &f, const Poly &g)
{
    return nonnegative_coeffs(f - g);
}

} // namespace qtri
