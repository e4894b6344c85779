#ifndef QTRI_OEIS_HPP
#define QTRI_OEIS_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <qtri/algebra.hpp>
#include <qtri/errors.hpp>
#include <qtri/triangles.hpp>

namespace qtri
{

// Index gap or non-increasing index in a b-file.
class ContiguityError : public ParseError
{
public:
    using ParseError::ParseError;
};

class ReshapeError : public Error
{
public:
    ReshapeError(const std::string &what, std::size_t residue) : Error(what), residue_(residue)
    {
    }
    // Entries left over after the last complete row.
    std::size_t residue() const noexcept
    {
        return residue_;
    }

private:
    std::size_t residue_;
};

class FetchError : public Error
{
public:
    using Error::Error;
};

class OfflineCacheMiss : public FetchError
{
public:
    using FetchError::FetchError;
};

// OEIS b-file: "<index> <value>" lines with contiguous indices.
struct BFile {
    std::string id;
    std::vector<std::pair<long, Integer>> entries;
};

bool is_oeis_id(std::string_view id) noexcept;

// Skips blank lines and '#' comments. Throws ParseError (with line number)
// on malformed lines and ContiguityError on gaps.
BFile parse_bfile(std::string_view text, std::string id = {});

// Retrieves a document from host/path; throws FetchError on failure.
using Transport = std::function<std::string(const std::string &host, const std::string &path)>;

// Single HTTPS GET through cpp-httplib.
Transport https_transport();

// Flag value, else $QTRI_CACHE_DIR, else $XDG_CACHE_HOME/qtri, else
// $HOME/.cache/qtri.
std::filesystem::path resolve_cache_dir(const std::optional<std::string> &flag);

// <cache_dir>/<id>.txt
std::filesystem::path cache_path(const std::filesystem::path &cache_dir, std::string_view id);

// Cached copy if present; otherwise (unless offline) downloads
// https://oeis.org/<id>/b<digits>.txt, stores it verbatim through a
// write-then-rename, and parses it. Offline with no cached copy throws
// OfflineCacheMiss.
BFile fetch_bfile(std::string_view id, const std::filesystem::path &cache_dir, bool offline,
                  const Transport &transport = https_transport());

// Splits the flat entries into rows of width arity * n + 1. Throws
// ReshapeError unless the entries fill rows 0..N exactly.
Triangle reshape(const BFile &b, std::size_t arity);

// Same, keeping only the complete rows (the trailing partial row is dropped).
Triangle reshape_complete_rows(const BFile &b, std::size_t arity);

} // namespace qtri

#endif
