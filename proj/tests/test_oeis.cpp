#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include <gtest/gtest.h>

#include "airpockets/catalog.hpp"
#include "airpockets/oeis.hpp"
#include "airpockets/oracle.hpp"

using namespace airpockets;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::ParseError;
}

fs::path fresh_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("airpockets-test-" + name + "-" +
                                            std::to_string(::getpid()));
    fs::remove_all(dir);
    return dir;
}

const char* kBfile =
    "# A004148 test copy\n"
    "0 1\n1 1\n2 1\n3 2\n4 4\n5 8\n6 17\n7 37\n8 82\n9 185\n10 423\n11 978\n12 2283\n";

// A local b-file server on an ephemeral port.
class LocalOeis {
public:
    LocalOeis() {
        server_.Get(R"(/(A\d{6})/b(\d{6})\.txt)", [this](const httplib::Request& req,
                                                         httplib::Response& res) {
            ++hits_;
            std::this_thread::sleep_for(std::chrono::milliseconds(20));
            const std::string id = req.matches[1];
            if (id == "A004148") res.set_content(kBfile, "text/plain");
            else if (id == "A999998") res.set_content("0 1\nthis is not a b-file\n", "text/plain");
            else res.status = 404;
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~LocalOeis() {
        server_.stop();
        thread_.join();
    }
    std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
    int hits() const { return hits_; }

private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<int> hits_{0};
};

} // namespace

TEST(Bfile, Parse) {
    auto rec = parse_bfile("A004148", kBfile);
    EXPECT_EQ(rec.first_index, 0);
    ASSERT_EQ(rec.terms.size(), 13u);
    EXPECT_EQ(rec.terms[12], 2283);
    auto neg = parse_bfile("A000001", "  # c\n\n5 -3\n6 12345678901234567890123\n");
    EXPECT_EQ(neg.first_index, 5);
    EXPECT_EQ(neg.terms[0], -3);
    EXPECT_EQ(neg.terms[1].get_str(), "12345678901234567890123");
}

TEST(Bfile, Malformed) {
    EXPECT_EQ(code_of([] { parse_bfile("A000001", "0 1\n1 x\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_bfile("A000001", "0 1 2\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_bfile("A000001", "0\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_bfile("A000001", "0 1\n2 1\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_bfile("A000001", "# nothing\n"); }), ErrorCode::ParseError);
}

TEST(Bfile, FormatRoundTrip) {
    auto rec = parse_bfile("A004148", kBfile);
    auto again = parse_bfile("A004148", format_bfile(rec));
    EXPECT_EQ(again.terms, rec.terms);
    EXPECT_EQ(again.first_index, rec.first_index);
}

TEST(Ids, Validation) {
    EXPECT_TRUE(is_sequence_id("A004148"));
    EXPECT_FALSE(is_sequence_id("A04148"));
    EXPECT_FALSE(is_sequence_id("B004148"));
    EXPECT_EQ(bfile_name("A004148"), "b004148.txt");
    EXPECT_EQ(code_of([] { OeisClient().fetch("nope"); }), ErrorCode::UnknownSequence);
}

TEST(Fixtures, ShapeAndProvenance) {
    const std::set<std::string> cited{"A004148", "A051286", "A110320", "A110236",
                                      "A203611", "A051291", "A062200", "A000035",
                                      "A093128", "A122514", "A329699"};
    std::set<std::string> seen;
    for (const auto& f : oeis_fixtures()) {
        seen.insert(std::string(f.id));
        EXPECT_GE(f.terms.size(), 15u) << f.id;
        EXPECT_EQ(f.provenance.size(), f.terms.size()) << f.id;
        EXPECT_EQ(f.provenance.find_first_not_of("po"), std::string_view::npos);
        // printed terms form a prefix
        EXPECT_EQ(f.provenance.find('p', f.provenance.find('o')), std::string_view::npos);
        EXPECT_GE(f.provenance.find('o'), 9u) << f.id;
    }
    EXPECT_EQ(seen, cited);
}

TEST(Fixtures, OracleRecount) {
    // each fixture is the brute-force count of the family it describes
    FamilySpec gp1 = FamilySpec::gdap(), gp2 = gp1, gp = gp1, gm = gp1;
    gp1.start_step = gp2.start_step = gp.start_step = StepKind::Up;
    gp1.end_step = StepKind::Down;
    gp2.end_step = StepKind::Up;
    gm.start_step = StepKind::Down;
    FamilySpec g0t1 = FamilySpec::bounded(0, 1), g0t2 = FamilySpec::bounded(0, 2);
    g0t1.end_step = g0t2.end_step = StepKind::Down;
    const std::map<std::string, FamilySpec> spec{
        {"A004148", FamilySpec::of(Family::DAP)},
        {"A051286", gp1},
        {"A110320", gp2},
        {"A110236", gp},
        {"A203611", gm},
        {"A051291", FamilySpec::gdap()},
        {"A062200", g0t2},
        {"A000035", g0t1},
        {"A093128", FamilySpec::prefix(std::nullopt, -2)},
        {"A122514", FamilySpec::bounded(-1, 1)},
        {"A329699", FamilySpec::of(Family::SpecialH)},
    };
    for (const auto& f : oeis_fixtures()) {
        const auto& s = spec.at(std::string(f.id));
        for (std::size_t i = 0; i < f.terms.size(); ++i)
            EXPECT_EQ(count_paths(f.first_index + static_cast<int>(i), s),
                      static_cast<std::uint64_t>(f.terms[i]))
                << f.id << " term " << i;
    }
}

TEST(Align, CitedPairsFromFixtures) {
    OeisOptions opts;
    opts.offline = true;
    opts.cache_dir = fresh_dir("align");
    OeisClient client(opts);
    for (const auto& c : oeis_citations()) {
        auto rec = client.fetch(c.id);
        EXPECT_EQ(rec.source, SequenceSource::Fixture);
        auto a = align_and_compare(catalog_series(c.name, {c.k, c.t, c.m}, 20), rec, 9);
        EXPECT_GE(a.matched, 9) << c.id << " " << c.name;
        EXPECT_LE(std::abs(a.shift), 5);
    }
}

TEST(Align, Examples) {
    auto g = align_and_compare(gf_gdap(GdapName::G, 20), *fixture_record("A051291"), 9);
    EXPECT_EQ(g.shift, 0);
    auto m = align_and_compare(gf_minorized(-1, 20), *fixture_record("A004148"), 9);
    EXPECT_EQ(m.shift, 1);
    EXPECT_EQ(code_of([] { align_and_compare(TruncatedSeries(20), *fixture_record("A051291")); }),
              ErrorCode::NoAlignment);
    EXPECT_EQ(code_of([] { align_and_compare(gf_dap(20), *fixture_record("A004148"), 7); }),
              ErrorCode::BadParams);
    EXPECT_EQ(code_of([] { align_and_compare(gf_dap(20), *fixture_record("A051291"), 9); }),
              ErrorCode::NoAlignment);
}

TEST(Align, LeadingZerosAreNotCompared) {
    auto rec = parse_bfile("A004148", kBfile);
    auto a = align_and_compare(gf_dap(20), rec, 9);
    EXPECT_EQ(a.shift, -1);
    EXPECT_EQ(a.matched, 12);
    auto m = align_and_compare(gf_minorized(-1, 20), rec, 9);
    EXPECT_EQ(m.shift, 2);
    EXPECT_EQ(m.first_n, 0);
}

TEST(Align, SpecExampleTermsAfterAlignment) {
    auto rec = *fixture_record("A004148");
    auto a = align_and_compare(gf_dap(20), rec, 9);
    std::vector<long> got;
    for (int n = 2; n <= 10; ++n) got.push_back(rec.terms[n + a.shift].get_si());
    EXPECT_EQ(got, (std::vector<long>{1, 1, 2, 4, 8, 17, 37, 82, 185}));
    auto h = *fixture_record("A329699");
    auto b = gf_H(12);
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(h.terms[n], b[n]);
}

TEST(Client, NetworkThenCache) {
    LocalOeis server;
    OeisOptions opts;
    opts.base_url = server.url();
    opts.cache_dir = fresh_dir("cache");
    OeisClient client(opts);

    auto first = client.fetch("A004148");
    EXPECT_EQ(first.source, SequenceSource::Network);
    EXPECT_EQ(first.terms.size(), 13u);
    EXPECT_TRUE(fs::exists(opts.cache_dir / "b004148.txt"));

    auto second = client.fetch("A004148");
    EXPECT_EQ(second.source, SequenceSource::Cache);
    EXPECT_EQ(second.terms, first.terms);
    EXPECT_EQ(server.hits(), 1);

    OeisOptions refresh = opts;
    refresh.refresh = true;
    EXPECT_EQ(OeisClient(refresh).fetch("A004148").source, SequenceSource::Network);
    EXPECT_EQ(server.hits(), 2);

    OeisOptions offline = opts;
    offline.offline = true;
    EXPECT_EQ(OeisClient(offline).fetch("A004148").source, SequenceSource::Cache);

    // the served copy has the leading a(0) = 1 that the series lacks
    auto aligned = align_and_compare(gf_dap(20), second, 9);
    EXPECT_EQ(aligned.shift, -1);
    EXPECT_EQ(aligned.first_n, 2);
    fs::remove_all(opts.cache_dir);
}

TEST(Client, Errors) {
    LocalOeis server;
    OeisOptions opts;
    opts.base_url = server.url();
    opts.cache_dir = fresh_dir("errors");
    OeisClient client(opts);
    EXPECT_EQ(code_of([&] { client.fetch("A999999"); }), ErrorCode::UnknownSequence);
    EXPECT_EQ(code_of([&] { client.fetch("A999998"); }), ErrorCode::ParseError);

    OeisOptions offline = opts;
    offline.offline = true;
    EXPECT_EQ(code_of([&] { OeisClient(offline).fetch("A000045"); }), ErrorCode::NetworkUnavailable);
    EXPECT_EQ(OeisClient(offline).fetch("A329699").source, SequenceSource::Fixture);
}

TEST(Client, UnreachableFallsBackToFixture) {
    OeisOptions opts;
    opts.base_url = "http://127.0.0.1:1";
    opts.timeout_seconds = 2;
    opts.cache_dir = fresh_dir("unreachable");
    OeisClient client(opts);
    EXPECT_EQ(client.fetch("A051291").source, SequenceSource::Fixture);
    EXPECT_EQ(code_of([&] { client.fetch("A000045"); }), ErrorCode::NetworkUnavailable);
}

TEST(Client, ConcurrentFetchesCoalesce) {
    LocalOeis server;
    OeisOptions opts;
    opts.base_url = server.url();
    opts.cache_dir = fresh_dir("concurrent");
    OeisClient client(opts);
    std::vector<std::thread> threads;
    std::vector<std::vector<Integer>> results(8);
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&, i] { results[i] = client.fetch("A004148").terms; });
    for (auto& t : threads) t.join();
    EXPECT_EQ(server.hits(), 1);
    for (const auto& r : results) EXPECT_EQ(r, results[0]);
    fs::remove_all(opts.cache_dir);
}

TEST(Client, CacheDirFromEnvironment) {
    auto dir = fresh_dir("env");
    ::setenv("AIRPOCKETS_OEIS_CACHE", dir.c_str(), 1);
    EXPECT_EQ(default_cache_dir(), dir);
    EXPECT_EQ(OeisOptions{}.cache_dir, dir);
    ::unsetenv("AIRPOCKETS_OEIS_CACHE");
}
