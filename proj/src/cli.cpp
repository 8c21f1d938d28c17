#include "lrq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "lrq/acceptance.hpp"
#include "lrq/classify.hpp"
#include "lrq/cyclic_type.hpp"
#include "lrq/deform.hpp"
#include "lrq/errors.hpp"
#include "lrq/json_codec.hpp"
#include "lrq/numtheory.hpp"
#include "lrq/singularity.hpp"

namespace lrq::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json doc() { return json{{"schema", 1}}; }

std::int64_t parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw UsageError("bad integer for " + what + ": '" + s + "'");
    }
    if (used != s.size()) throw UsageError("bad integer for " + what + ": '" + s + "'");
    return v;
}

std::vector<std::int64_t> parse_list(const std::string& s, const std::string& what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
    if (out.empty()) throw UsageError(what + " is empty");
    return out;
}

Params parse_params_flag(const std::string& s) {
    Params ps;
    if (s.empty()) return ps;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("params must look like k=v,k=v; got '" + item + "'");
        ps.emplace_back(item.substr(0, eq), parse_int(item.substr(eq + 1), item.substr(0, eq)));
    }
    return ps;
}

Family family_or_raise(const std::string& name) {
    auto f = parse_family(name);
    if (!f) raise(ErrorKind::BadInput, "unknown family '" + name + "'");
    return *f;
}

json params_json(const Params& ps) {
    json o = json::object();
    for (const auto& [k, v] : ps) o[k] = v;
    return o;
}

// Group spec: {"generators": [...], "dim"?} or {"family": name, "params": {...}}.
FiniteMatrixGroup parse_group(const json& j) {
    if (!j.is_object()) raise(ErrorKind::ParseError, "group spec must be an object");
    if (j.contains("generators")) {
        if (!j.at("generators").is_array()) raise(ErrorKind::ParseError, "'generators' must be an array");
        std::vector<CycMatrix> gens;
        for (const auto& g : j.at("generators")) gens.push_back(lrq::json::decode_matrix(g));
        std::size_t dim = 0;
        if (j.contains("dim")) {
            if (!j.at("dim").is_number_integer() || j.at("dim").get<std::int64_t>() < 1)
                raise(ErrorKind::ParseError, "'dim' must be a positive integer");
            dim = j.at("dim").get<std::size_t>();
        }
        if (gens.empty() && dim == 0) raise(ErrorKind::BadInput, "an empty generator list needs 'dim'");
        return close(gens, dim);
    }
    if (j.contains("family")) {
        if (!j.at("family").is_string()) raise(ErrorKind::ParseError, "'family' must be a string");
        Params ps;
        if (j.contains("params")) {
            if (!j.at("params").is_object()) raise(ErrorKind::ParseError, "'params' must be an object");
            for (const auto& [k, v] : j.at("params").items()) {
                if (!v.is_number_integer()) raise(ErrorKind::ParseError, "parameter '" + k + "' must be an integer");
                ps.emplace_back(k, v.get<std::int64_t>());
            }
        }
        return close(family_generators(family_or_raise(j.at("family").get<std::string>()), ps));
    }
    raise(ErrorKind::ParseError, "group spec needs 'generators' or 'family'");
}

std::int64_t char_of(const json& j, std::int64_t fallback) {
    if (!j.contains("char")) return fallback;
    if (!j.at("char").is_number_integer()) raise(ErrorKind::ParseError, "'char' must be an integer");
    return j.at("char").get<std::int64_t>();
}

// Scheme: {"char", "group"}. Representation: {"scheme", "images"}. A bare
// group spec or scheme gets its natural representation.
LrRepresentation parse_representation(const json& j, std::int64_t p) {
    if (!j.is_object()) raise(ErrorKind::ParseError, "input must be a JSON object");
    if (j.contains("scheme")) {
        const auto& s = j.at("scheme");
        if (!s.is_object() || !s.contains("group")) raise(ErrorKind::ParseError, "'scheme' needs a 'group'");
        auto scheme = make_scheme(char_of(s, p), parse_group(s.at("group")));
        if (!j.contains("images")) return natural_representation(scheme);
        if (!j.at("images").is_array()) raise(ErrorKind::ParseError, "'images' must be an array");
        std::vector<CycMatrix> images;
        for (const auto& a : j.at("images")) images.push_back(lrq::json::decode_matrix(a));
        return make_representation(scheme, images);
    }
    if (j.contains("group")) return natural_representation(make_scheme(char_of(j, p), parse_group(j.at("group"))));
    return natural_representation(make_scheme(char_of(j, p), parse_group(j)));
}

struct Source {
    std::string input;
    std::string family;
    std::string params;
    std::int64_t p = 0;
};

void add_source_flags(CLI::App* sub, Source& src) {
    auto* in = sub->add_option("--input", src.input, "JSON file: group spec, scheme or representation");
    auto* fam = sub->add_option("--family", src.family, "family name, e.g. BD or Metacyclic3");
    sub->add_option("--params", src.params, "family parameters, k=v,k=v");
    sub->add_option("--char", src.p, "characteristic (0 or a prime)");
    in->excludes(fam);
}

LrRepresentation load(const Source& src) {
    if (!src.input.empty()) {
        std::ifstream f(src.input);
        if (!f) throw UsageError("cannot open '" + src.input + "'");
        json j;
        try {
            j = json::parse(f);
        } catch (const json::exception& e) {
            raise(ErrorKind::ParseError, e.what());
        }
        return parse_representation(j, src.p);
    }
    if (src.family.empty()) throw UsageError("give --input or --family");
    auto f = family_or_raise(src.family);
    auto ps = parse_params_flag(src.params);
    return natural_representation(make_scheme(src.p, close(family_generators(f, ps))));
}

json entry_json(const CatalogEntry& e) {
    json j = doc();
    j["family"] = std::string(family_name(e.family));
    j["params"] = params_json(e.params);
    j["length"] = e.length;
    json gens = json::array();
    for (const auto& a : e.scheme.abs->generator_matrices()) gens.push_back(lrq::json::encode(a));
    j["generators"] = gens;
    j["dim"] = e.rep.dim;
    j["lambda"] = e.lambda;
    j["gorenstein"] = e.gorenstein;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

std::string entry_text(const CatalogEntry& e) {
    std::string s(family_name(e.family));
    for (const auto& [k, v] : e.params) s += " " + k + "=" + std::to_string(v);
    s += "  length=" + std::to_string(e.length) + " gorenstein=" + (e.gorenstein ? "yes" : "no");
    if (!e.note.empty()) s += "  (" + e.note + ")";
    return s;
}

json ints(const std::vector<std::int64_t>& v) { return json(v); }

std::string diagram_name(const RootDiagram& d) { return d.empty() ? "0" : d.str(); }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with linearly reductive quotient singularities", "lrq"};
    app.set_help_all_flag("--help-all", "all subcommands");
    bool seed_tests = false;
    app.add_flag("--seed-tests", seed_tests)->group("");

    // classify
    std::string cl_group;
    std::int64_t cl_char = 0, cl_max_length = 0, cl_max_m = 50;
    bool cl_json = false;
    auto* classify = app.add_subcommand("classify", "catalog of very small subgroup schemes");
    classify->add_option("group", cl_group, "sl2, gl2, sl3 or gl3")->required()->check(
        CLI::IsMember({"sl2", "gl2", "sl3", "gl3"}));
    classify->add_option("--char", cl_char, "characteristic")->required();
    classify->add_option("--max-length", cl_max_length, "length bound")->required();
    classify->add_option("--max-m", cl_max_m, "bound on m for sl3/gl3 (default 50)");
    classify->add_flag("--json", cl_json, "JSON output");

    Source lam_src, inv_src;
    auto* lam = app.add_subcommand("lambda", "lambda-invariant and representation predicates");
    add_source_flags(lam, lam_src);
    auto* inv = app.add_subcommand("invariants", "invariants of the quotient singularity");
    add_source_flags(inv, inv_src);

    std::int64_t tor_n = 0;
    std::string tor_q;
    auto* toric = app.add_subcommand("toric", "cyclic quotient 1/n(q1,...,qd)");
    toric->add_option("--n", tor_n, "group order")->required();
    toric->add_option("--q", tor_q, "weights q1,q2,...")->required();

    std::int64_t rig_char = 0;
    std::string rig_type, rig_meta;
    std::optional<std::int64_t> rig_cube;
    auto* rigidity = app.add_subcommand("rigidity", "infinitesimal rigidity of a threefold type");
    rigidity->add_option("--char", rig_char, "characteristic")->required();
    auto* rt = rigidity->add_option("--type", rig_type, "cyclic type \"1/n(q1,q2,q3)\"");
    auto* rm = rigidity->add_option("--metacyclic", rig_meta, "m,f,N,r");
    rigidity->add_option("--cube-root", rig_cube, "element of F_p that zeta_3 reduces to");
    rt->excludes(rm);

    std::string gamma;
    auto* drdp = app.add_subcommand("deform-rdp", "root-subsystem specializations of a rational double point");
    drdp->add_option("--gamma", gamma, "A_n, D_n, E6, E7 or E8, or a sum like 2A1+A3")->required();

    std::string hj_a, hj_ap;
    auto* hjd = app.add_subcommand("hj-dominate", "dominance of continued fractions");
    hjd->add_option("--a", hj_a, "a_1,...,a_k")->required();
    hjd->add_option("--aprime", hj_ap, "a'_1,...,a'_l")->required();

    std::string rdp_type;
    std::int64_t rdp_char = 0;
    auto* rdp = app.add_subcommand("rdp", "group scheme of a rational double point");
    rdp->add_option("--type", rdp_type, "A_n, D_n, E6, E7 or E8")->required();
    rdp->add_option("--char", rdp_char, "characteristic")->required();

    app.require_subcommand(0, 1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    bool json_errors = !classify->parsed() || cl_json;
    try {
        if (seed_tests) {
            auto results = acceptance::run_all();
            acceptance::print(out, results);
            bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
            return all ? kOk : kDomainError;
        }
        if (classify->parsed()) {
            std::vector<CatalogEntry> cat;
            if (cl_group == "sl2") cat = sl2_catalog(cl_char, cl_max_length);
            else if (cl_group == "gl2") cat = gl2_catalog(cl_char, cl_max_length);
            else if (cl_group == "sl3") cat = sl3_catalog(cl_char, cl_max_m);
            else cat = gl3_catalog(cl_char, Gl3Bounds{cl_max_m, cl_max_length});
            if (cl_group == "sl3")
                std::erase_if(cat, [&](const CatalogEntry& e) { return e.length > cl_max_length; });
            if (cl_json) {
                json arr = json::array();
                for (const auto& e : cat) arr.push_back(entry_json(e));
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& e : cat) out << entry_text(e) << "\n";
                out << cat.size() << " entries\n";
            }
            return kOk;
        }
        if (lam->parsed()) {
            auto rep = load(lam_src);
            auto pr = predicates(rep);
            json j = doc();
            j["char"] = rep.scheme.p;
            j["length"] = rep.scheme.length();
            j["dimension"] = rep.dim;
            j["lambda"] = lambda(rep);
            j["lambda_character_sum"] = lambda_character_sum(rep);
            j["very_small"] = pr.very_small;
            j["small"] = pr.small;
            j["faithful"] = pr.faithful;
            j["gorenstein"] = pr.gorenstein;
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (inv->parsed()) {
            auto x = make_singularity(load(inv_src));
            auto v = invariants(x);
            json j = doc();
            j["char"] = x.characteristic();
            j["dimension"] = x.dimension();
            j["length"] = v.length;
            j["f_signature"] = v.f_signature.str();
            j["class_group"] = ints(v.class_group.factors);
            json dual = json::array();
            for (const auto& f : v.class_group_dual)
                dual.push_back({{"order", f.order}, {"p_part", f.p_part}, {"prime_to_p", f.prime_to_p}});
            j["class_group_dual"] = dual;
            j["pi1_etale"] = {{"order", v.pi1_etale.order}, {"abelianization", ints(v.pi1_etale.abelianization.factors)}};
            j["gorenstein"] = v.gorenstein;
            try {
                j["e_hk"] = hilbert_kunz(x).str();
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotImplementedForNonAbelian) throw;
                j["e_hk"] = nullptr;
                j["e_hk_note"] = e.detail();
            }
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (toric->parsed()) {
            CyclicType t{tor_n, parse_list(tor_q, "--q")};
            validate(t);
            auto canon = canonical_toric_form(t);
            json j = doc();
            j["type"] = format_type(t);
            j["canonical_form"] = format_type(canon);
            j["hilbert_basis"] = hilbert_basis(t);
            if (t.dimension() == 2 && t.n >= 2) {
                auto q = nt::mod(nt::mod_inverse(t.weights[0], t.n).value() * t.weights[1], t.n);
                auto a = hj_fraction(t.n, q);
                j["hj"] = ints(a);
                j["chain"] = ints(chain_graph(a).self_intersection);
            }
            j["e_hk"] = hilbert_kunz(t).str();
            j["class_group"] = t.n == 1 ? json::array() : json::array({t.n});
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (rigidity->parsed()) {
            if (rig_type.empty() == rig_meta.empty()) throw UsageError("give exactly one of --type or --metacyclic");
            json j = doc();
            j["char"] = rig_char;
            if (!rig_type.empty()) {
                auto t = parse_type(rig_type);
                validate(t);
                j["type"] = format_type(t);
                if (t.dimension() >= 4) {
                    j["rigid"] = rigidity_dim_ge_4(static_cast<int>(t.dimension()));
                    j["defSpace"] = "rigid";
                    out << j.dump(2) << "\n";
                    return kOk;
                }
                if (t.dimension() < 3)
                    raise(ErrorKind::BadDimension, "rigidity is answered for dimension >= 3");
                auto tt = threefold_from_cyclic(t);
                auto d = deformation_space(tt, rig_char);
                j["normalized"] = str(tt);
                j["rigid"] = d.rigid;
                j["defSpace"] = d.str();
                if (!d.rigid) {
                    j["exponent"] = d.exponent;
                    j["reduced"] = d.reduced();
                }
            } else {
                auto v = parse_list(rig_meta, "--metacyclic");
                if (v.size() != 4) throw UsageError("--metacyclic needs m,f,N,r");
                ThreefoldType tt = MetacyclicThreefold{v[0], v[1], v[2], v[3]};
                j["type"] = str(tt);
                try {
                    auto d = deformation_space(tt, rig_char, rig_cube);
                    j["rigid"] = d.rigid;
                    j["defSpace"] = d.str();
                    if (!d.rigid) {
                        j["exponent"] = d.exponent;
                        j["reduced"] = d.reduced();
                    }
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::MissingIdentification) throw;
                    j["rigid"] = nullptr;
                    j["nonRigidIf"] = "r mod p ∈ {z, z²} — choice-dependent";
                    json by = json::object();
                    for (auto z : primitive_cube_roots(rig_char)) {
                        auto d = deformation_space(tt, rig_char, z);
                        by[std::to_string(z)] = {{"rigid", d.rigid}, {"defSpace", d.str()}};
                    }
                    j["byCubeRoot"] = by;
                }
            }
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (drdp->parsed()) {
            auto g0 = parse_root_diagram(gamma);
            if (g0.empty()) throw UsageError("--gamma must be nonempty");
            auto specs = rdp_specializations(g0);
            json names = json::array(), lengths = json::array();
            std::int64_t len0 = 0;
            for (const auto& c : g0.components()) len0 = std::max(len0, ade_length(c));
            bool monotone = true;
            for (const auto& d : specs) {
                names.push_back(diagram_name(d));
                json l = json::array();
                for (const auto& c : d.components()) {
                    l.push_back(ade_length(c));
                    monotone = monotone && ade_length(c) <= len0;
                }
                lengths.push_back(l);
            }
            json j = doc();
            j["gamma"] = diagram_name(g0);
            j["length"] = len0;
            j["specializations"] = names;
            j["lengths"] = lengths;
            j["monotone"] = monotone;
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (hjd->parsed()) {
            auto d = cyclic_deformation_dominance(parse_list(hj_a, "--a"), parse_list(hj_ap, "--aprime"));
            json j = doc();
            j["dominates"] = d.dominates;
            j["n"] = d.n;
            j["n_prime"] = d.n_prime;
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (rdp->parsed()) {
            auto t = parse_ade(rdp_type);
            if (rdp_char != 0 && !nt::is_prime(rdp_char))
                raise(ErrorKind::InvalidParameters, "characteristic must be 0 or a prime");
            auto f = is_f_regular_graph(ade_graph(t), rdp_char);
            json j = doc();
            j["type"] = t.str();
            j["char"] = rdp_char;
            j["f_regular"] = f.f_regular;
            j["reason"] = f.reason;
            if (auto r = rdp_group_for(t, rdp_char)) {
                j["realized"] = true;
                j["group"] = r->group;
                j["family"] = std::string(family_name(r->family));
                j["params"] = params_json(r->params);
                j["length"] = r->length;
                j["etale"] = r->etale;
            } else {
                j["realized"] = false;
            }
            out << j.dump(2) << "\n";
            return kOk;
        }
        err << app.help();
        return kUsageError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        if (json_errors) {
            json j = doc();
            j["error"] = std::string(e.name());
            j["detail"] = e.detail();
            out << j.dump(2) << "\n";
        } else {
            err << "error: " << e.name() << ": " << e.detail() << "\n";
        }
        return kDomainError;
    }
}

} // namespace lrq::cli
