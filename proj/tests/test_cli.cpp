#include <doctest.h>

#include <fstream>
#include <limits>
#include <functional>
#include <set>
#include <sstream>

#include "lrq/classify.hpp"
#include "lrq/cli.hpp"
#include "lrq/deform.hpp"
#include "lrq/json_codec.hpp"
#include "lrq/singularity.hpp"
#include "support.hpp"

using namespace lrq;
using Json = nlohmann::json;
namespace codec = lrq::json;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
    Json doc() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_CASE("classify sl2 example") {
    auto r = run({"classify", "sl2", "--char", "0", "--max-length", "120", "--json"});
    REQUIRE(r.code == cli::kOk);
    auto j = r.doc();
    REQUIRE(j.is_array());
    CHECK(j.size() == 152);
    CHECK(j.back()["family"] == "BI");
    CHECK(j.back()["length"] == 120);
    CHECK(j.back()["lambda"] == 0);
    CHECK(j.back()["schema"] == 1);
}

TEST_CASE("classify JSON generators regenerate the groups") {
    auto r = run({"classify", "gl2", "--char", "5", "--max-length", "40", "--json"});
    REQUIRE(r.code == cli::kOk);
    for (const auto& e : r.doc()) {
        std::vector<CycMatrix> gens;
        for (const auto& g : e["generators"]) gens.push_back(codec::decode_matrix(g));
        auto g = close(gens, e["dim"].get<std::size_t>());
        CHECK(static_cast<std::int64_t>(g.order()) == e["length"].get<std::int64_t>());
    }
}

TEST_CASE("classify text output") {
    auto r = run({"classify", "sl3", "--char", "0", "--max-length", "10"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("Mu") != std::string::npos);
    auto g = run({"classify", "gl3", "--char", "0", "--max-length", "63", "--max-m", "7", "--json"});
    REQUIRE(g.code == cli::kOk);
    bool meta = false;
    for (const auto& e : g.doc()) meta = meta || e["family"] == "Metacyclic3";
    CHECK(meta);
}

TEST_CASE("rigidity example") {
    auto r = run({"rigidity", "--type", "1/7(1,2,4)", "--char", "7"});
    REQUIRE(r.code == cli::kOk);
    auto j = r.doc();
    CHECK(j["rigid"] == false);
    CHECK(j["defSpace"] == "W(k)[eps]/(eps^2, 7*eps)");
    CHECK(run({"rigidity", "--type", "1/7(1,2,4)", "--char", "2"}).doc()["rigid"] == true);
    CHECK(run({"rigidity", "--type", "1/7(1,1,1,1)", "--char", "7"}).doc()["rigid"] == true);
    auto m = run({"rigidity", "--metacyclic", "7,2,1,2", "--char", "7"});
    REQUIRE(m.code == cli::kOk);
    auto mj = m.doc();
    CHECK(mj["rigid"].is_null());
    CHECK(mj["byCubeRoot"]["2"]["rigid"] == false);
    CHECK(mj["byCubeRoot"]["4"]["rigid"] == true);
    CHECK(run({"rigidity", "--metacyclic", "7,2,1,2", "--char", "7", "--cube-root", "2"}).doc()["rigid"] == false);
}

TEST_CASE("toric example") {
    auto r = run({"toric", "--n", "5", "--q", "1,4"});
    REQUIRE(r.code == cli::kOk);
    auto j = r.doc();
    CHECK(j["hj"] == Json::array({2, 2, 2, 2}));
    CHECK(j["e_hk"] == "9/5");
    CHECK(j["class_group"] == Json::array({5}));
}

TEST_CASE("other subcommands") {
    auto d = run({"deform-rdp", "--gamma", "A3"});
    REQUIRE(d.code == cli::kOk);
    CHECK(d.doc()["specializations"].size() == 5);
    CHECK(d.doc()["monotone"] == true);
    auto h = run({"hj-dominate", "--a", "3,2,3", "--aprime", "2,2,2"}).doc();
    CHECK(h["dominates"] == true);
    CHECK(h["n"] == 12);
    auto rd = run({"rdp", "--type", "E8", "--char", "7"}).doc();
    CHECK(rd["group"] == "BI_120");
    CHECK(rd["f_regular"] == true);
    CHECK(run({"rdp", "--type", "E8", "--char", "5"}).doc()["realized"] == false);
    auto inv = run({"invariants", "--family", "Mu", "--params", "n=5", "--char", "5"});
    REQUIRE(inv.code == cli::kOk);
    CHECK(inv.doc()["e_hk"] == "9/5");
    auto lam = run({"lambda", "--family", "BD", "--params", "n=4", "--char", "0"});
    REQUIRE(lam.code == cli::kOk);
    CHECK(lam.doc()["lambda"] == 0);
    CHECK(lam.doc()["lambda_character_sum"] == 0);
}

TEST_CASE("json input files") {
    auto path = std::string("lrq_cli_test_input.json");
    {
        std::ofstream f(path);
        Json spec = {{"char", 0}, {"group", {{"generators", Json::array({codec::encode(CycMatrix::diagonal(
                                                                 {CycNum(-1), CycNum(1)}))})}}}};
        f << spec.dump();
    }
    auto r = run({"lambda", "--input", path});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.doc()["lambda"] == 1);
    CHECK(r.doc()["very_small"] == false);
    auto inv = run({"invariants", "--input", path});
    CHECK(inv.code == cli::kDomainError);
    CHECK(inv.doc()["error"] == "NotVerySmall");
    std::remove(path.c_str());
    CHECK(run({"lambda", "--input", "/nonexistent/x.json"}).code != cli::kOk);
}

TEST_CASE("exit codes") {
    CHECK(run({"classify", "sl5", "--char", "0", "--max-length", "5"}).code == cli::kUsageError);
    CHECK(run({"toric", "--n", "abc", "--q", "1"}).code == cli::kUsageError);
    CHECK(run({"no-such-command"}).code == cli::kUsageError);
    CHECK(run({}).code == cli::kUsageError);
    auto bad = run({"hj-dominate", "--a", "3,1", "--aprime", "2"});
    CHECK(bad.code == cli::kDomainError);
    CHECK(bad.doc()["error"] == "BadSequence");
    CHECK(bad.doc()["schema"] == 1);
    auto p4 = run({"rigidity", "--type", "1/7(1,2,4)", "--char", "4"});
    CHECK(p4.code == cli::kDomainError);
    CHECK(p4.doc()["error"] == "InvalidParameters");
    auto text = run({"classify", "gl2", "--char", "4", "--max-length", "5"});
    CHECK(text.code == cli::kDomainError);
    CHECK(text.out.empty());
    CHECK_FALSE(text.err.empty());
}

TEST_CASE("output is deterministic") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"classify", "gl2", "--char", "0", "--max-length", "30", "--json"},
          {"deform-rdp", "--gamma", "E7"},
          {"toric", "--n", "7", "--q", "1,2,4"}}) {
        auto a = run(args), b = run(args);
        CHECK(a.code == cli::kOk);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("every error kind is reachable and distinctly named") {
    std::set<std::string_view> names;
    for (auto k : kAllErrorKinds) names.insert(error_name(k));
    CHECK(names.size() == kAllErrorKinds.size());

    auto c3c3 = [] {
        return make_scheme(3, close({CycMatrix::diagonal({root_of_unity(3), CycNum(1)}),
                                     CycMatrix::diagonal({CycNum(1), root_of_unity(3)})}));
    };
    std::vector<std::pair<ErrorKind, std::function<void()>>> triggers = {
        {ErrorKind::NotDivisible, [] { promote(root_of_unity(3), 4); }},
        {ErrorKind::ConductorTooLarge, [] { root_of_unity(2521); }},
        {ErrorKind::ArithmeticOverflow, [] { Rational(std::numeric_limits<std::int64_t>::max()) + Rational(1); }},
        {ErrorKind::DivisionByZero, [] { Rational(1, 0); }},
        {ErrorKind::DimensionMismatch, [] { CycMatrix::identity(2) * CycMatrix::identity(3); }},
        {ErrorKind::CapExceeded, [] { close(family_generators(Family::BI, {}), 0, 10); }},
        {ErrorKind::NotInvertible, [] { close({CycMatrix::diagonal({CycNum(0), CycNum(1)})}); }},
        {ErrorKind::NotLinearlyReductive, [] { make_scheme(2, close(family_generators(Family::BT, {}))); }},
        {ErrorKind::NotAHomomorphism,
         [] {
             auto s = make_scheme(0, close(family_generators(Family::Mu, {{"n", 4}})));
             make_representation(s, {CycMatrix::diagonal({root_of_unity(3), CycNum(1)})});
         }},
        {ErrorKind::ConnectedPartNotCyclic, [&] { ad_character(c3c3()); }},
        {ErrorKind::NotVerySmall,
         [] { make_singularity(add_trivial(make_entry(Family::Mu, {{"n", 5}}, 0).rep, 1)); }},
        {ErrorKind::NotImplementedForNonAbelian,
         [] { hilbert_kunz(make_singularity(make_entry(Family::BD, {{"n", 3}}, 0).rep)); }},
        {ErrorKind::BadInput, [] { parse_ade("F4"); }},
        {ErrorKind::BadSequence, [] { cyclic_deformation_dominance({}, {2}); }},
        {ErrorKind::BadDimension, [] { rigidity_dim_ge_4(3); }},
        {ErrorKind::MissingIdentification, [] { is_rigid(MetacyclicThreefold{7, 2, 1, 2}, 7); }},
        {ErrorKind::InvalidParameters, [] { is_rigid(CyclicThreefold{7, 2, 4}, 4); }},
        {ErrorKind::ParseError, [] { parse_type("x"); }},
    };
    std::set<ErrorKind> hit;
    for (const auto& [kind, f] : triggers) {
        CAPTURE(error_name(kind));
        CHECK(error_kind(f) == kind);
        hit.insert(kind);
    }
    CHECK(hit.size() == kAllErrorKinds.size());
}
