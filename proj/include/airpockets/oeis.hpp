#ifndef AIRPOCKETS_OEIS_HPP
#define AIRPOCKETS_OEIS_HPP

// OEIS b-file client: HTTP fetch, on-disk cache, embedded fixtures, and
// shift alignment of a series against a sequence.
//
// Needs CPPHTTPLIB_OPENSSL_SUPPORT for https:// base URLs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <httplib.h>

#include "airpockets/error.hpp"
#include "airpockets/oeis_fixtures.hpp"
#include "airpockets/series.hpp"

namespace airpockets {

enum class SequenceSource { Network, Cache, Fixture };

inline std::string to_string(SequenceSource s) {
    switch (s) {
    case SequenceSource::Network: return "network";
    case SequenceSource::Cache: return "cache";
    case SequenceSource::Fixture: return "fixture";
    }
    return "?";
}

struct SequenceRecord {
    std::string id;
    long first_index = 0;
    std::vector<Integer> terms;
    SequenceSource source = SequenceSource::Fixture;
};

inline bool is_sequence_id(const std::string& id) {
    static const std::regex re("A[0-9]{6}");
    return std::regex_match(id, re);
}

inline void require_sequence_id(const std::string& id) {
    if (!is_sequence_id(id))
        throw Error(ErrorCode::UnknownSequence, "'" + id + "' is not an A-number");
}

/// "A004148" -> "b004148.txt"
inline std::string bfile_name(const std::string& id) {
    require_sequence_id(id);
    return "b" + id.substr(1) + ".txt";
}

/// Parses "index value" lines. Blank lines and '#' comments are skipped;
/// indices must be consecutive.
inline SequenceRecord parse_bfile(const std::string& id, const std::string& text) {
    SequenceRecord rec;
    rec.id = id;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<long> next;
    while (std::getline(in, line)) {
        ++lineno;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line.substr(start));
        std::string idx_text, value_text, extra;
        fields >> idx_text >> value_text;
        auto fail = [&](const std::string& why) {
            return Error(ErrorCode::ParseError,
                         id + " line " + std::to_string(lineno) + ": " + why);
        };
        if (value_text.empty() || (fields >> extra)) throw fail("expected 'index value'");
        long idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stol(idx_text, &used);
            if (used != idx_text.size()) throw fail("bad index '" + idx_text + "'");
        } catch (const std::logic_error&) {
            throw fail("bad index '" + idx_text + "'");
        }
        Integer value;
        if (value.set_str(value_text, 10) != 0) throw fail("bad value '" + value_text + "'");
        if (next && idx != *next) throw fail("index " + std::to_string(idx) + " out of sequence");
        if (!next) rec.first_index = idx;
        next = idx + 1;
        rec.terms.push_back(std::move(value));
    }
    if (rec.terms.empty()) throw Error(ErrorCode::ParseError, id + ": no terms");
    return rec;
}

inline std::string format_bfile(const SequenceRecord& rec) {
    std::string out = "# " + rec.id + "\n";
    for (std::size_t i = 0; i < rec.terms.size(); ++i)
        out += std::to_string(rec.first_index + static_cast<long>(i)) + " " +
               rec.terms[i].get_str() + "\n";
    return out;
}

inline std::optional<SequenceRecord> fixture_record(const std::string& id) {
    for (const auto& f : oeis_fixtures()) {
        if (f.id != id) continue;
        SequenceRecord rec;
        rec.id = id;
        rec.first_index = f.first_index;
        for (auto v : f.terms) rec.terms.emplace_back(static_cast<long>(v));
        rec.source = SequenceSource::Fixture;
        return rec;
    }
    return std::nullopt;
}

/// $AIRPOCKETS_OEIS_CACHE, else $XDG_CACHE_HOME/airpockets/oeis, else
/// ~/.cache/airpockets/oeis.
inline std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("AIRPOCKETS_OEIS_CACHE"); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "airpockets" / "oeis";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "airpockets" / "oeis";
    return std::filesystem::temp_directory_path() / "airpockets-oeis";
}

struct OeisOptions {
    std::filesystem::path cache_dir = default_cache_dir();
    std::string base_url = "https://oeis.org";
    bool offline = false;
    bool refresh = false;  // ignore cached copies
    bool use_fixtures = true;
    int timeout_seconds = 10;
};

class OeisClient {
public:
    explicit OeisClient(OeisOptions options = {}) : options_(std::move(options)) {}

    const OeisOptions& options() const noexcept { return options_; }

    /// Cache, then network, then fixture. Concurrent calls for one id are
    /// serialized; distinct ids proceed in parallel.
    SequenceRecord fetch(const std::string& id) {
        require_sequence_id(id);
        std::lock_guard lock(*id_mutex(id));

        if (!options_.refresh)
            if (auto cached = read_cache(id)) return *cached;

        std::string network_error = "offline";
        if (!options_.offline) {
            httplib::Client client(options_.base_url);
            client.set_connection_timeout(options_.timeout_seconds);
            client.set_read_timeout(options_.timeout_seconds);
            client.set_follow_location(true);
            auto res = client.Get("/" + id + "/" + bfile_name(id));
            if (res && res->status == 404)
                throw Error(ErrorCode::UnknownSequence, id + " not found");
            if (res && res->status == 200) {
                SequenceRecord rec = parse_bfile(id, res->body);
                rec.source = SequenceSource::Network;
                write_cache(rec);
                return rec;
            }
            network_error = res ? "HTTP " + std::to_string(res->status)
                                : httplib::to_string(res.error());
        }
        if (options_.use_fixtures)
            if (auto fixture = fixture_record(id)) return *fixture;
        throw Error(ErrorCode::NetworkUnavailable,
                    id + ": " + network_error + ", and no cached copy or fixture");
    }

    std::filesystem::path cache_path(const std::string& id) const {
        return options_.cache_dir / bfile_name(id);
    }

private:
    std::optional<SequenceRecord> read_cache(const std::string& id) const {
        std::ifstream in(cache_path(id));
        if (!in) return std::nullopt;
        std::stringstream buf;
        buf << in.rdbuf();
        SequenceRecord rec = parse_bfile(id, buf.str());
        rec.source = SequenceSource::Cache;
        return rec;
    }

    void write_cache(const SequenceRecord& rec) const {
        std::error_code ec;
        std::filesystem::create_directories(options_.cache_dir, ec);
        auto target = cache_path(rec.id);
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) return;
            out << format_bfile(rec);
            if (!out) return;
        }
        std::filesystem::rename(tmp, target, ec);
    }

    std::shared_ptr<std::mutex> id_mutex(const std::string& id) {
        std::lock_guard lock(table_mutex_);
        auto& slot = per_id_[id];
        if (!slot) slot = std::make_shared<std::mutex>();
        return slot;
    }

    OeisOptions options_;
    std::mutex table_mutex_;
    std::map<std::string, std::shared_ptr<std::mutex>> per_id_;
};

struct Alignment {
    int shift = 0;       // coefficient(n) == terms[n + shift]
    int matched = 0;     // overlapping terms, all equal
    int first_n = 0;     // first coefficient index in the overlap
};

/// Tries shifts -5..5. A shift is accepted when every overlapping term from
/// the first nonzero coefficient on agrees and the overlap has at least
/// min_match terms. The accepted shift of least magnitude wins, negative first.
inline Alignment align_and_compare(const TruncatedSeries& series, const SequenceRecord& record,
                                   int min_match = 9) {
    if (min_match < 8) throw Error(ErrorCode::BadParams, "min_match must be >= 8");
    const auto coeffs = series.integer_coeffs();
    const int size = static_cast<int>(record.terms.size());
    int start = 0;
    while (start < static_cast<int>(coeffs.size()) && sgn(coeffs[start]) == 0) ++start;
    for (int mag = 0; mag <= 5; ++mag) {
        for (int s : {-mag, mag}) {
            if (mag == 0 && s != 0) continue;
            Alignment a{s, 0, -1};
            bool ok = true, nonzero = false;
            for (int n = start; n < static_cast<int>(coeffs.size()); ++n) {
                int idx = n + s;
                if (idx < 0 || idx >= size) continue;
                if (coeffs[n] != record.terms[idx]) {
                    ok = false;
                    break;
                }
                if (a.first_n < 0) a.first_n = n;
                ++a.matched;
                nonzero = nonzero || sgn(coeffs[n]) != 0;
            }
            if (ok && nonzero && a.matched >= min_match) return a;
            if (mag == 0) break;
        }
    }
    throw Error(ErrorCode::NoAlignment,
                record.id + ": no shift in [-5,5] with " + std::to_string(min_match) +
                    " matching terms");
}

/// Series cited as matching each sequence: catalog name and parameters.
struct OeisCitation {
    std::string id;
    std::string name;
    std::optional<int> k;
    std::optional<int> t;
    std::optional<int> m;
};

inline const std::vector<OeisCitation>& oeis_citations() {
    static const std::vector<OeisCitation> cites = {
        {"A004148", "A", {}, {}, {}},
        {"A004148", "minorized", {}, {}, -1},
        {"A051286", "Gp1", {}, {}, {}},
        {"A051286", "Gm2", {}, {}, {}},
        {"A110320", "Gp2", {}, {}, {}},
        {"A110320", "Gm1", {}, {}, {}},
        {"A110320", "prefix", -2, {}, {}},
        {"A110236", "Gp", {}, {}, {}},
        {"A110236", "f0", {}, {}, {}},
        {"A110236", "prefix", -1, {}, {}},
        {"A203611", "Gm", {}, {}, {}},
        {"A203611", "g0", {}, {}, {}},
        {"A051291", "G", {}, {}, {}},
        {"A062200", "g0t", {}, 2, {}},
        {"A000035", "g0t", {}, 1, {}},
        {"A093128", "minorized", {}, {}, -2},
        {"A122514", "sym", {}, 1, {}},
        {"A329699", "H", {}, {}, {}},
    };
    return cites;
}

} // namespace airpockets

#endif // AIRPOCKETS_OEIS_HPP
