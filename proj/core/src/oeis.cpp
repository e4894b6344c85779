#include <qtri/oeis.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include <httplib.h>

namespace qtri
{

bool is_oeis_id(std::string_view id) noexcept
{
    return id.size() == 7 && id[0] == 'A'
           && std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

BFile parse_bfile(std::string_view text, std::string id)
{
    BFile b;
    b.id = std::move(id);
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string index_tok;
        std::string value_tok;
        std::string extra;
        if (!(ls >> index_tok >> value_tok) || (ls >> extra)) {
            throw ParseError(lineno, "expected '<index> <value>'");
        }
        long index = 0;
        try {
            std::size_t used = 0;
            index = std::stol(index_tok, &used);
            if (used != index_tok.size()) {
                throw std::invalid_argument(index_tok);
            }
        } catch (const std::exception &) {
            throw ParseError(lineno, "bad index '" + index_tok + "'");
        }
        Integer value;
        if (value_tok.front() == '+' || value.set_str(value_tok, 10) != 0) {
            throw ParseError(lineno, "bad value '" + value_tok + "'");
        }
        if (!b.entries.empty() && index != b.entries.back().first + 1) {
            throw ContiguityError(lineno, "index " + std::to_string(index) + " follows "
                                              + std::to_string(b.entries.back().first));
        }
        b.entries.emplace_back(index, std::move(value));
    }
    return b;
}

Transport https_transport()
{
    return [](const std::string &host, const std::string &path) -> std::string {
        httplib::SSLClient cli(host);
        cli.set_follow_location(true);
        cli.set_connection_timeout(15);
        cli.set_read_timeout(60);
        auto res = cli.Get(path);
        if (!res) {
            throw FetchError("GET https://" + host + path + " failed: " + httplib::to_string(res.error()));
        }
        if (res->status != 200) {
            throw FetchError("GET https://" + host + path + " returned HTTP " + std::to_string(res->status));
        }
        return res->body;
    };
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string> &flag)
{
    if (flag && !flag->empty()) {
        return *flag;
    }
    if (const char *env = std::getenv("QTRI_CACHE_DIR"); env && *env) {
        return env;
    }
    if (const char *xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "qtri";
    }
    if (const char *home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "qtri";
    }
    return std::filesystem::temp_directory_path() / "qtri-cache";
}

std::filesystem::path cache_path(const std::filesystem::path &cache_dir, std::string_view id)
{
    return cache_dir / (std::string(id) + ".txt");
}

namespace
{

std::string read_file(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw FetchError("cannot read " + p.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Concurrent writers each use their own temporary; rename is atomic, so
// readers see either no file or a complete one.
void write_atomically(const std::filesystem::path &target, const std::string &body)
{
    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    const auto tmp = target.parent_path()
                     / (target.filename().string() + ".tmp." + std::to_string(::getpid()) + "."
                        + std::to_string(counter++) + "." + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << body;
        if (!out.flush()) {
            throw FetchError("cannot write " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw FetchError("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

} // namespace

BFile fetch_bfile(std::string_view id, const std::filesystem::path &cache_dir, bool offline,
                  const Transport &transport)
{
    if (!is_oeis_id(id)) {
        throw FetchError("'" + std::string(id) + "' is not an OEIS id (expected A followed by six digits)");
    }
    const auto path = cache_path(cache_dir, id);
    if (std::filesystem::exists(path)) {
        return parse_bfile(read_file(path), std::string(id));
    }
    if (offline) {
        throw OfflineCacheMiss("offline cache miss: " + path.string() + " does not exist");
    }
    const std::string body = transport("oeis.org", "/" + std::string(id) + "/b" + std::string(id.substr(1)) + ".txt");
    BFile parsed = parse_bfile(body, std::string(id));
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    if (ec) {
        throw FetchError("cannot create cache directory " + cache_dir.string() + ": " + ec.message());
    }
    write_atomically(path, body);
    return parsed;
}

namespace
{

// Number of complete rows and the leftover entry count.
std::pair<std::size_t, std::size_t> row_split(std::size_t count, std::size_t arity)
{
    std::size_t rows = 0;
    std::size_t used = 0;
    while (used + arity * rows + 1 <= count) {
        used += arity * rows + 1;
        ++rows;
    }
    return {rows, count - used};
}

Triangle build(const BFile &b, std::size_t arity, std::size_t rows)
{
    std::vector<std::vector<Rational>> out(rows);
    std::size_t pos = 0;
    for (std::size_t n = 0; n < rows; ++n) {
        out[n].reserve(arity * n + 1);
        for (std::size_t k = 0; k < arity * n + 1; ++k) {
            out[n].emplace_back(b.entries[pos++].second);
        }
    }
    return Triangle(arity, std::move(out));
}

} // namespace

Triangle reshape(const BFile &b, std::size_t arity)
{
    if (arity == 0) {
        throw ConfigError("arity must be positive");
    }
    const auto [rows, residue] = row_split(b.entries.size(), arity);
    if (rows == 0 || residue != 0) {
        throw ReshapeError(std::to_string(b.entries.size()) + " entries do not fill whole rows of arity "
                               + std::to_string(arity) + " (" + std::to_string(residue) + " left over after "
                               + std::to_string(rows) + " rows)",
                           residue);
    }
    return build(b, arity, rows);
}

Triangle reshape_complete_rows(const BFile &b, std::size_t arity)
{
    if (arity == 0) {
        throw ConfigError("arity must be positive");
    }
    const auto [rows, residue] = row_split(b.entries.size(), arity);
    if (rows == 0) {
        throw ReshapeError("b-file has no complete row", residue);
    }
    return build(b, arity, rows);
}

} // namespace qtri
