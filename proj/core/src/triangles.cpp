#include <qtri/triangles.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <qtri/errors.hpp>

namespace qtri
{

// ---------------------------------------------------------------- Triangle

Triangle::Triangle(std::size_t arity, std::vector<std::vector<Rational>> rows) : arity_(arity), rows_(std::move(rows))
{
    if (arity_ == 0) {
        throw ConfigError("triangle arity must be positive");
    }
    if (rows_.empty()) {
        throw ConfigError("triangle needs at least row 0");
    }
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != arity_ * n + 1) {
            throw ConfigError("row " + std::to_string(n) + " has " + std::to_string(rows_[n].size())
                              + " entries, expected " + std::to_string(arity_ * n + 1));
        }
    }
}

const std::vector<Rational> &Triangle::row(std::size_t n) const
{
    if (n >= rows_.size()) {
        throw RangeError("row " + std::to_string(n) + " beyond n_max = " + std::to_string(n_max()));
    }
    return rows_[n];
}

Rational Triangle::at(std::size_t n, long k) const
{
    const auto &r = row(n);
    if (k < 0 || static_cast<std::size_t>(k) >= r.size()) {
        return Rational(0);
    }
    return r[static_cast<std::size_t>(k)];
}

std::vector<Rational> Triangle::column(std::size_t k) const
{
    std::vector<Rational> out;
    out.reserve(rows_.size());
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        out.push_back(at(n, static_cast<long>(k)));
    }
    return out;
}

void write_triangle(std::ostream &os, const Triangle &t)
{
    os << "# arity=" << t.arity() << " n_max=" << t.n_max() << '\n';
    for (const auto &row : t.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k != 0) {
                os << ' ';
            }
            os << to_string(row[k]);
        }
        os << '\n';
    }
}

std::string format_triangle(const Triangle &t)
{
    std::ostringstream os;
    write_triangle(os, t);
    return os.str();
}

Triangle read_triangle(std::istream &is)
{
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> arity;
    std::optional<std::size_t> n_max;
    std::vector<std::vector<Rational>> rows;

    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            if (arity) {
                continue;
            }
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) {
                    continue;
                }
                const std::string key = tok.substr(0, eq);
                const std::string val = tok.substr(eq + 1);
                try {
                    if (key == "arity") {
                        arity = std::stoul(val);
                    } else if (key == "n_max") {
                        n_max = std::stoul(val);
                    }
                } catch (const std::exception &) {
                    throw ParseError(lineno, "bad header value '" + tok + "'");
                }
            }
            if (!arity || !n_max) {
                throw ParseError(lineno, "header must read '# arity=<a> n_max=<n>'");
            }
            continue;
        }
        if (!arity) {
            throw ParseError(lineno, "row before the '# arity=<a> n_max=<n>' header");
        }
        std::istringstream ls(line);
        std::string tok;
        std::vector<Rational> row;
        while (ls >> tok) {
            try {
                row.push_back(parse_rational(tok));
            } catch (const std::invalid_argument &e) {
                throw ParseError(lineno, e.what());
            }
        }
        const std::size_t n = rows.size();
        if (row.size() != *arity * n + 1) {
            throw ParseError(lineno, "row " + std::to_string(n) + " has " + std::to_string(row.size())
                                         + " entries, expected " + std::to_string(*arity * n + 1));
        }
        rows.push_back(std::move(row));
    }
    if (!arity) {
        throw ParseError(lineno, "missing '# arity=<a> n_max=<n>' header");
    }
    if (rows.size() != *n_max + 1) {
        throw ParseError(lineno, "header declares n_max=" + std::to_string(*n_max) + " but file has "
                                     + std::to_string(rows.size()) + " rows");
    }
    return Triangle(*arity, std::move(rows));
}

Triangle parse_triangle(std::string_view text)
{
    std::istringstream is{std::string(text)};
    return read_triangle(is);
}

// ------------------------------------------------------------- CoeffScheme

CoeffScheme CoeffScheme::constant(const Rational &c)
{
    return CoeffScheme(Constant{c});
}

CoeffScheme CoeffScheme::affine(const Rational &slope, const Rational &intercept)
{
    return CoeffScheme(Affine{slope, intercept});
}

CoeffScheme CoeffScheme::table(std::vector<Rational> values, long start, std::optional<Rational> tail)
{
    return CoeffScheme(Table{std::move(values), start, std::move(tail)});
}

CoeffScheme CoeffScheme::head_then(std::vector<Rational> head, const Rational &tail)
{
    return table(std::move(head), 0, tail);
}

bool CoeffScheme::covers(long k) const noexcept
{
    if (const auto *t = std::get_if<Table>(&kind_)) {
        if (k < t->start) {
            return false;
        }
        return k < t->start + static_cast<long>(t->values.size()) || t->tail.has_value();
    }
    return true;
}

Rational CoeffScheme::at(long k) const
{
    return std::visit(
        [k](const auto &kind) -> Rational {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return kind.value;
            } else if constexpr (std::is_same_v<T, Affine>) {
                return Rational(kind.slope * k + kind.intercept);
            } else {
                const long end = kind.start + static_cast<long>(kind.values.size());
                if (k >= kind.start && k < end) {
                    return kind.values[static_cast<std::size_t>(k - kind.start)];
                }
                if (k >= end && kind.tail) {
                    return *kind.tail;
                }
                throw ConfigError("coefficient table has no entry for k = " + std::to_string(k));
            }
        },
        kind_);
}

std::optional<long> CoeffScheme::first_gap(long first, long last) const
{
    for (long k = first; k <= last; ++k) {
        if (!covers(k)) {
            return k;
        }
    }
    return std::nullopt;
}

std::string CoeffScheme::describe() const
{
    return std::visit(
        [](const auto &kind) -> std::string {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return "constant(" + to_string(kind.value) + ")";
            } else if constexpr (std::is_same_v<T, Affine>) {
                return "affine(" + to_string(kind.slope) + "*k + " + to_string(kind.intercept) + ")";
            } else {
                std::string s = "table(start=" + std::to_string(kind.start) + ": [";
                for (std::size_t i = 0; i < kind.values.size(); ++i) {
                    s += (i ? ", " : "") + to_string(kind.values[i]);
                }
                s += "]";
                if (kind.tail) {
                    s += ", then " + to_string(*kind.tail);
                }
                return s + ")";
            }
        },
        kind_);
}

// ------------------------------------------------------------- ConstParams

ConstParams::ConstParams(Rational alpha_, Rational beta_, Rational gamma_, Rational e_, Rational f_, Rational g_,
                         Rational h_)
    : alpha(std::move(alpha_)), beta(std::move(beta_)), gamma(std::move(gamma_)), e(std::move(e_)), f(std::move(f_)),
      g(std::move(g_)), h(std::move(h_))
{
    static const char *names[] = {"alpha", "beta", "gamma", "e", "f", "g", "h"};
    const auto v = as_vector();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) {
            throw ConfigError(std::string("parameter ") + names[i] + " = " + to_string(v[i]) + " is negative");
        }
    }
}

ConstParams ConstParams::parse(std::string_view csv)
{
    std::vector<Rational> v;
    std::string s(csv);
    std::size_t pos = 0;
    while (true) {
        const auto comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            v.push_back(parse_rational(tok));
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("bad parameter list: ") + e.what());
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (v.size() != 7) {
        throw ConfigError("expected 7 parameters alpha,beta,gamma,e,f,g,h; got " + std::to_string(v.size()));
    }
    return ConstParams(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
}

std::vector<Rational> ConstParams::as_vector() const
{
    return {alpha, beta, gamma, e, f, g, h};
}

// ------------------------------------------------------ bi^s-nomial arrays

std::vector<Rational> bisnomial_row(std::size_t n, std::size_t s)
{
    if (s == 0) {
        throw ConfigError("bi^s-nomial coefficients need s >= 1");
    }
    std::vector<Integer> row{1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Integer> next(s * m + 1);
        // Sliding window over the previous row: next[k] = sum_{j=0..s} row[k-j].
        Integer window = 0;
        for (std::size_t k = 0; k < next.size(); ++k) {
            if (k < row.size()) {
                window += row[k];
            }
            if (k >= s + 1 && k - s - 1 < row.size()) {
                window -= row[k - s - 1];
            }
            next[k] = window;
        }
        row = std::move(next);
    }
    return {row.begin(), row.end()};
}

Rational bisnomial(std::size_t n, long k, std::size_t s)
{
    if (k < 0 || static_cast<std::size_t>(k) > s * n) {
        return Rational(0);
    }
    return bisnomial_row(n, s)[static_cast<std::size_t>(k)];
}

Triangle s_pascal(std::size_t s, std::size_t n_max)
{
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        rows.push_back(bisnomial_row(n, s));
    }
    return Triangle(s, std::move(rows));
}

// -------------------------------------------------------------- generators

namespace
{

void require_cover(const CoeffScheme &c, const char *name, long first, long last)
{
    if (auto gap = c.first_gap(first, last)) {
        throw ConfigError(std::string("scheme ") + name + " is undefined at k = " + std::to_string(*gap)
                          + " (needed on [" + std::to_string(first) + ", " + std::to_string(last) + "])");
    }
}

} // namespace

Triangle gen_recursive(const CoeffScheme &f, const CoeffScheme &g, std::size_t n_max)
{
    const long last = static_cast<long>(n_max);
    require_cover(f, "f", 0, last);
    require_cover(g, "g", 0, last);

    std::vector<std::vector<Rational>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({Rational(1)});
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto &prev = rows.back();
        std::vector<Rational> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            Rational v = 0;
            if (k >= 1) {
                v += prev[k - 1];
            }
            if (k < prev.size()) {
                v += f.at(static_cast<long>(k)) * prev[k];
            }
            if (k + 1 < prev.size()) {
                v += g.at(static_cast<long>(k)) * prev[k + 1];
            }
            row[k] = v;
        }
        rows.push_back(std::move(row));
    }
    return Triangle(1, std::move(rows));
}

namespace
{

// One step of the five-term recurrence. coef(slot, k) returns the multiplier
// of A_{n-1,k-2+slot} in A_{n,k}, or nullopt if the term is absent.
template <typename Coef>
std::vector<Rational> penta_step(const std::vector<Rational> &prev, std::size_t width, Coef &&coef)
{
    std::vector<Rational> row(width);
    const long plen = static_cast<long>(prev.size());
    for (std::size_t k = 0; k < width; ++k) {
        Rational v = 0;
        for (int slot = 0; slot < 5; ++slot) {
            const long ref = static_cast<long>(k) - 2 + slot;
            if (ref < 0 || ref >= plen || prev[static_cast<std::size_t>(ref)] == 0) {
                continue;
            }
            if (auto c = coef(slot, static_cast<long>(k))) {
                v += *c * prev[static_cast<std::size_t>(ref)];
            }
        }
        row[k] = v;
    }
    return row;
}

} // namespace

Triangle gen_penta(const PentaSchemes &s, std::size_t n_max)
{
    const long last = 2 * static_cast<long>(n_max);
    require_cover(s.gamma, "gamma", 2, last);
    require_cover(s.e, "e", 1, last);
    require_cover(s.f, "f", 0, last);
    require_cover(s.g, "g", 0, last);
    require_cover(s.h, "h", 0, last);

    auto coef = [&s](int slot, long k) -> std::optional<Rational> {
        switch (slot) {
        case 0:
            return k >= 2 ? std::optional<Rational>(s.gamma.at(k)) : std::nullopt;
        case 1:
            return k >= 1 ? std::optional<Rational>(s.e.at(k)) : std::nullopt;
        case 2:
            return s.f.at(k);
        case 3:
            return s.g.at(k);
        default:
            return s.h.at(k);
        }
    };

    std::vector<std::vector<Rational>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({Rational(1)});
    for (std::size_t n = 1; n <= n_max; ++n) {
        rows.push_back(penta_step(rows.back(), 2 * n + 1, coef));
    }
    return Triangle(2, std::move(rows));
}

Triangle gen_const(const ConstParams &p, std::size_t n_max)
{
    auto coef = [&p](int slot, long k) -> std::optional<Rational> {
        if (k == 0) {
            switch (slot) {
            case 2:
                return p.alpha;
            case 3:
                return p.g;
            case 4:
                return p.h;
            default:
                return std::nullopt;
            }
        }
        if (k == 1) {
            switch (slot) {
            case 1:
                return p.beta;
            case 2:
                return p.f;
            case 3:
                return p.g;
            case 4:
                return p.h;
            default:
                return std::nullopt;
            }
        }
        static constexpr Rational ConstParams::*members[] = {&ConstParams::gamma, &ConstParams::e, &ConstParams::f,
                                                             &ConstParams::g, &ConstParams::h};
        return p.*members[slot];
    };

    std::vector<std::vector<Rational>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({Rational(1)});
    for (std::size_t n = 1; n <= n_max; ++n) {
        rows.push_back(penta_step(rows.back(), 2 * n + 1, coef));
    }
    return Triangle(2, std::move(rows));
}

// ----------------------------------------------------------------- presets

const std::vector<std::string> &preset_names()
{
    static const std::vector<std::string> names{"pascal",          "s_pascal", "stirling2", "aigner_catalan",
                                                "shapiro_catalan", "motzkin",  "bell",      "schroder_large"};
    return names;
}

Preset preset(std::string_view name, std::size_t s)
{
    using CS = CoeffScheme;
    const Rational zero(0), one(1), two(2), three(3);
    auto recursive = [&](CS f, CS g, std::optional<ConstParams> params) {
        Preset p;
        p.name = std::string(name);
        p.kind = Preset::Kind::recursive;
        p.f = std::move(f);
        p.g = std::move(g);
        p.params = std::move(params);
        return p;
    };

    if (name == "pascal") {
        return recursive(CS::constant(one), CS::constant(zero), ConstParams(1, 1, 0, 1, 1, 0, 0));
    }
    if (name == "s_pascal") {
        if (s == 0) {
            throw ConfigError("s_pascal needs s >= 1");
        }
        Preset p;
        p.name = "s_pascal";
        p.kind = Preset::Kind::s_pascal;
        p.s = s;
        if (s == 1) {
            p.params = ConstParams(1, 1, 0, 1, 1, 0, 0);
        } else if (s == 2) {
            p.params = ConstParams(1, 1, 1, 1, 1, 0, 0);
        }
        return p;
    }
    if (name == "stirling2") {
        return recursive(CS::affine(one, one), CS::constant(zero), std::nullopt);
    }
    if (name == "aigner_catalan") {
        return recursive(CS::head_then({one}, two), CS::constant(one), ConstParams(1, 1, 0, 1, 2, 1, 0));
    }
    if (name == "shapiro_catalan") {
        return recursive(CS::constant(two), CS::constant(one), ConstParams(2, 1, 0, 1, 2, 1, 0));
    }
    if (name == "motzkin") {
        return recursive(CS::constant(one), CS::constant(one), ConstParams(1, 1, 0, 1, 1, 1, 0));
    }
    if (name == "bell") {
        return recursive(CS::affine(one, one), CS::affine(one, one), std::nullopt);
    }
    if (name == "schroder_large") {
        return recursive(CS::head_then({two}, three), CS::constant(two), ConstParams(2, 1, 0, 1, 3, 2, 0));
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

Triangle generate(const Preset &p, std::size_t n_max)
{
    if (p.kind == Preset::Kind::s_pascal) {
        return s_pascal(p.s, n_max);
    }
    return gen_recursive(p.f, p.g, n_max);
}

// ------------------------------------------------------- auxiliary matrices

Poly row_gen_fn(const Triangle &t, std::size_t n)
{
    return Poly(t.row(n));
}

PolySeq row_gen_fns(const Triangle &t)
{
    std::vector<Poly> polys;
    polys.reserve(t.num_rows());
    for (std::size_t n = 0; n < t.num_rows(); ++n) {
        polys.push_back(row_gen_fn(t, n));
    }
    return PolySeq(std::move(polys));
}

RatMatrix triangle_matrix(const Triangle &t, std::size_t n_max)
{
    t.row(n_max);
    const std::size_t width = t.arity() * n_max + 1;
    RatMatrix m(n_max + 1, width);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto &row = t.row(n);
        for (std::size_t k = 0; k < row.size() && k < width; ++k) {
            m(n, k) = row[k];
        }
    }
    return m;
}

PolyMatrix b_matrix(const Triangle &t, std::size_t n_max)
{
    t.row(n_max);
    const std::size_t width = t.arity() * n_max + 1;
    PolyMatrix b(n_max + 1, width);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto &row = t.row(n);
        // Tail sums from the right: b_{n,k} = A_{n,k} q^k + b_{n,k+1}.
        Poly tail;
        for (std::size_t k = width; k-- > 0;) {
            if (k < row.size()) {
                tail += Poly::monomial(row[k], k);
            }
            b(n, k) = tail;
        }
    }
    return b;
}

PolyMatrix t_matrix(std::size_t size)
{
    PolyMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            m(i, j) = Poly::monomial(Rational(1), i);
        }
    }
    return m;
}

RatMatrix j_matrix(const ConstParams &p, std::size_t size)
{
    RatMatrix j(size, size);
    auto put = [&](std::size_t r, long c, const Rational &v) {
        if (c >= 0 && static_cast<std::size_t>(c) < size) {
            j(r, static_cast<std::size_t>(c)) = v;
        }
    };
    for (std::size_t r = 0; r < size; ++r) {
        const long d = static_cast<long>(r);
        if (r == 0) {
            put(0, 0, p.alpha);
            put(0, 1, p.beta);
            put(0, 2, p.gamma);
            continue;
        }
        put(r, d - 2, p.h);
        put(r, d - 1, p.g);
        put(r, d, p.f);
        put(r, d + 1, p.e);
        put(r, d + 2, p.gamma);
    }
    return j;
}

} // namespace qtri
