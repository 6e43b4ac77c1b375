// kmu: exact symbolic computation for unprojection ideals.
//
// Subcommands: pfaffian | det | wedge | koszul | unproject | verify.
// JSON in, canonical text out (or --json for machine output).
// Exit codes: 0 success, 1 verification failure (witness printed),
//             2 input error, 3 resource ceiling.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "kmu/complex.hpp"
#include "kmu/groebner.hpp"
#include "kmu/io.hpp"
#include "kmu/unproject.hpp"

namespace {

using kmu::io::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCeiling = 3;

struct CommonOpts {
    std::string input;
    std::string order;  // empty = take from the input file
    bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--input", opts.input, "input JSON file")->required();
    cmd->add_option("--order", opts.order, "monomial order override (grevlex|lex)")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    cmd->add_flag("--json", opts.as_json, "emit machine-readable JSON");
}

json load_input(const CommonOpts& opts) {
    json j = kmu::io::load_json_file(opts.input);
    if (!opts.order.empty()) j["order"] = opts.order;
    return j;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw kmu::io::InputError(std::string("missing field '") + name + "'");
    return *it;
}

std::vector<kmu::Polynomial> poly_list(const kmu::ContextPtr& ctx, const json& j,
                                       const char* what) {
    if (!j.is_array())
        throw kmu::io::InputError(std::string("'") + what + "' must be an array");
    std::vector<kmu::Polynomial> out;
    for (const auto& e : j) out.push_back(kmu::io::poly_from_json(ctx, e));
    return out;
}

void emit(const CommonOpts& opts, const json& machine, const std::string& text) {
    if (opts.as_json)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << text;
}

int run_pfaffian(const CommonOpts& opts) {
    json j = load_input(opts);
    auto ctx = kmu::io::context_from_json(j);
    kmu::SkewMatrix a = kmu::io::skew_from_json(ctx, field(j, "matrix"));
    if (a.size() % 2 == 0) {
        kmu::Polynomial pf = kmu::pfaffian_even(a);
        emit(opts, json{{"pfaffian", pf.to_string()}},
             "pfaffian: " + pf.to_string() + "\n");
    } else {
        auto pf = kmu::pfaffians_odd(a);
        json arr = json::array();
        std::string text;
        for (std::size_t i = 0; i < pf.size(); ++i) {
            arr.push_back(pf[i].to_string());
            text += "pfaffian[" + std::to_string(i + 1) + "]: " +
                    pf[i].to_string() + "\n";
        }
        emit(opts, json{{"pfaffians", std::move(arr)}}, text);
    }
    return kExitOk;
}

int run_det(const CommonOpts& opts) {
    json j = load_input(opts);
    auto ctx = kmu::io::context_from_json(j);
    kmu::PolyMatrix m = kmu::io::matrix_from_json(ctx, field(j, "matrix"));
    kmu::Polynomial d = kmu::determinant(m);
    emit(opts, json{{"det", d.to_string()}}, "det: " + d.to_string() + "\n");
    return kExitOk;
}

int run_wedge(const CommonOpts& opts) {
    json j = load_input(opts);
    auto ctx = kmu::io::context_from_json(j);
    kmu::PolyMatrix m = kmu::io::matrix_from_json(ctx, field(j, "matrix"));
    auto w = kmu::wedge(m);
    json arr = json::array();
    std::string text;
    for (std::size_t i = 0; i < w.size(); ++i) {
        arr.push_back(w[i].to_string());
        text += "wedge[" + std::to_string(i + 1) + "]: " + w[i].to_string() + "\n";
    }
    emit(opts, json{{"wedge", std::move(arr)}}, text);
    return kExitOk;
}

int run_koszul(const CommonOpts& opts) {
    json j = load_input(opts);
    auto ctx = kmu::io::context_from_json(j);
    auto w = poly_list(ctx, field(j, "w"), "w");
    kmu::ChainComplex c = kmu::koszul_complex(w);
    json arr = json::array();
    std::string text;
    for (std::size_t i = 1; i <= c.length(); ++i) {
        arr.push_back(kmu::io::matrix_to_json(c.diff(i)));
        text += "d_" + std::to_string(i) + ":\n" + c.diff(i).to_string() + "\n";
    }
    emit(opts, json{{"diffs", std::move(arr)}}, text);
    return kExitOk;
}

struct UnprojectOpts : CommonOpts {
    std::string kind;
    std::string tname = "T";
    bool show_work = false;
};

int run_unproject(const UnprojectOpts& opts) {
    json j = load_input(opts);
    if (!opts.kind.empty() && field(j, "kind").get<std::string>() != opts.kind)
        throw kmu::io::InputError("--kind '" + opts.kind +
                                  "' does not match input field 'kind' ('" +
                                  field(j, "kind").get<std::string>() + "')");
    kmu::io::UnprojectionInput input = kmu::io::unprojection_input_from_json(j);
    kmu::UnprojectionResult r = std::visit(
        [&](const auto& d) { return [&] {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, kmu::CiData>)
                return kmu::unproject_ci(d, opts.tname);
            else if constexpr (std::is_same_v<T, kmu::TomData>)
                return kmu::unproject_tom(d, opts.tname);
            else
                return kmu::unproject_jerry(d, opts.tname);
        }(); },
        input);

    std::string text;
    const char* kind = r.kind == kmu::UnprojectionKind::Ci    ? "ci"
                       : r.kind == kmu::UnprojectionKind::Tom ? "tom"
                                                              : "jerry";
    text += std::string("kind: ") + kind + "\n";
    text += "unproj_var: " + r.unproj_var + "\n";
    text += "generators:\n";
    for (std::size_t i = 0; i < r.ideal.gens.size(); ++i)
        text += "  [" + std::to_string(i + 1) + "] " +
                r.ideal.gens[i].to_string() + "\n";
    text += "g:\n";
    for (std::size_t i = 0; i < r.g.size(); ++i)
        text += "  [" + std::to_string(i + 1) + "] " + r.g[i].to_string() + "\n";
    if (opts.show_work) {
        if (r.q) text += "Q:\n" + r.q->to_string() + "\n";
        for (std::size_t i = 0; i < r.pfaffians.size(); ++i)
            text += "P[" + std::to_string(i + 1) + "]: " +
                    r.pfaffians[i].to_string() + "\n";
        for (std::size_t i = 0; i < r.h.size(); ++i) {
            text += "H[" + std::to_string(i + 1) + "]:";
            for (const auto& e : r.h[i]) text += " " + e.to_string() + ";";
            text += "\n";
        }
        for (std::size_t i = 0; i < r.k_polys.size(); ++i)
            text += "K[" + std::to_string(i + 1) + "]: " +
                    r.k_polys[i].to_string() + "\n";
        for (std::size_t i = 0; i < r.l_polys.size(); ++i)
            text += "L[" + std::to_string(i + 1) + "]: " +
                    r.l_polys[i].to_string() + "\n";
    }
    emit(opts, kmu::io::result_to_json(r, opts.show_work), text);
    return kExitOk;
}

struct VerifyOpts : CommonOpts {
    std::size_t max_pairs = 200000;
    std::string tname = "T";
    bool allow_t_sign_flip = false;
};

int run_verify_member(const VerifyOpts& opts) {
    json j = load_input(opts);
    auto ctx = kmu::io::context_from_json(j);
    kmu::Ideal ideal(ctx, poly_list(ctx, field(j, "gens"), "gens"));
    std::vector<kmu::Polynomial> members;
    if (j.contains("members"))
        members = poly_list(ctx, j["members"], "members");
    else
        members.push_back(kmu::io::poly_from_json(ctx, field(j, "member")));

    kmu::GroebnerOptions gopts;
    gopts.max_pairs = opts.max_pairs;
    kmu::GroebnerBasis basis = kmu::GroebnerBasis::compute(ideal, gopts);

    bool all_in = true;
    json results = json::array();
    std::string text;
    for (std::size_t i = 0; i < members.size(); ++i) {
        kmu::NormalForm nf = basis.normal_form(members[i]);
        bool in = nf.is_zero();
        all_in = all_in && in;
        results.push_back(json{{"index", i + 1},
                               {"member", in},
                               {"normal_form", nf.numerator.to_string()}});
        text += "member[" + std::to_string(i + 1) + "]: " +
                (in ? "in ideal"
                    : "NOT in ideal (normal form: " + nf.numerator.to_string() +
                          ")") +
                "\n";
    }
    emit(opts, json{{"ok", all_in}, {"results", std::move(results)}}, text);
    return all_in ? kExitOk : kExitVerifyFail;
}

int run_verify_equal(const VerifyOpts& opts) {
    json j = load_input(opts);
    auto ctx = kmu::io::context_from_json(j);
    kmu::Ideal left(ctx, poly_list(ctx, field(j, "left"), "left"));
    kmu::Ideal right(ctx, poly_list(ctx, field(j, "right"), "right"));

    kmu::GroebnerOptions gopts;
    gopts.max_pairs = opts.max_pairs;

    kmu::IdealEquality eq = kmu::ideal_equal(left, right, gopts);
    bool flipped = false;
    if (!eq.equal && opts.allow_t_sign_flip) {
        if (!ctx->has(opts.tname))
            throw kmu::io::InputError("--allow-T-sign-flip: variable '" +
                                      opts.tname + "' is not declared in 'vars'");
        std::map<std::string, kmu::Polynomial> flip{
            {opts.tname, -kmu::Polynomial::variable(ctx, opts.tname)}};
        std::vector<kmu::Polynomial> fgens;
        for (const auto& g : left.gens) fgens.push_back(g.substitute_partial(flip));
        eq = kmu::ideal_equal(kmu::Ideal(ctx, std::move(fgens)), right, gopts);
        flipped = eq.equal;
    }

    json out{{"equal", eq.equal}, {"sign_flip_applied", flipped}};
    std::string text;
    if (eq.equal) {
        text = "ideals are equal";
        if (flipped) text += " (after " + opts.tname + " -> -" + opts.tname +
                             " on the left)";
        text += "\n";
    } else {
        const auto& w = *eq.witness;
        text = "ideals differ: generator [" + std::to_string(w.generator + 1) +
               "] of the " + (w.side == 1 ? "left" : "right") +
               " side is not in the other ideal (normal form: " +
               w.remainder.to_string() + ")\n";
        out["witness"] = json{{"side", w.side == 1 ? "left" : "right"},
                              {"generator", w.generator + 1},
                              {"normal_form", w.remainder.to_string()}};
    }
    emit(opts, out, text);
    return eq.equal ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact unprojection-ideal calculator and verifier"};
    app.require_subcommand(1);

    CommonOpts pf_opts, det_opts, wedge_opts, koszul_opts;
    UnprojectOpts unproj_opts;
    VerifyOpts member_opts, equal_opts;

    add_common(app.add_subcommand("pfaffian",
                                  "Pfaffian(s) of a skew-symmetric matrix"),
               pf_opts);
    add_common(app.add_subcommand("det", "exact determinant"), det_opts);
    add_common(app.add_subcommand("wedge", "signed maximal minors of an "
                                           "r x (r+1) matrix"),
               wedge_opts);
    add_common(app.add_subcommand("koszul", "Koszul complex differentials"),
               koszul_opts);

    CLI::App* unproj = app.add_subcommand("unproject",
                                          "construct an unprojection ideal");
    add_common(unproj, unproj_opts);
    unproj->add_option("--kind", unproj_opts.kind,
                       "expected input kind (ci|tom|jerry); validated against "
                       "the input file")
        ->check(CLI::IsMember({"ci", "tom", "jerry"}));
    unproj->add_option("--tname", unproj_opts.tname,
                       "name of the unprojection variable");
    unproj->add_flag("--show-work", unproj_opts.show_work,
                     "print intermediate objects (Q, Pfaffians, H/K/L)");

    CLI::App* verify = app.add_subcommand("verify", "Groebner-based checks");
    verify->require_subcommand(1);
    CLI::App* member = verify->add_subcommand("member", "ideal membership");
    add_common(member, member_opts);
    member->add_option("--max-pairs", member_opts.max_pairs,
                       "S-pair ceiling for Buchberger");
    CLI::App* equal = verify->add_subcommand("equal", "ideal equality");
    add_common(equal, equal_opts);
    equal->add_option("--max-pairs", equal_opts.max_pairs,
                      "S-pair ceiling for Buchberger");
    equal->add_option("--tname", equal_opts.tname,
                      "variable negated by --allow-T-sign-flip");
    equal->add_flag("--allow-T-sign-flip", equal_opts.allow_t_sign_flip,
                    "also accept equality after negating the unprojection "
                    "variable on the left side");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand("pfaffian")) return run_pfaffian(pf_opts);
        if (app.got_subcommand("det")) return run_det(det_opts);
        if (app.got_subcommand("wedge")) return run_wedge(wedge_opts);
        if (app.got_subcommand("koszul")) return run_koszul(koszul_opts);
        if (app.got_subcommand("unproject")) return run_unproject(unproj_opts);
        if (verify->got_subcommand("member")) return run_verify_member(member_opts);
        if (verify->got_subcommand("equal")) return run_verify_equal(equal_opts);
    } catch (const kmu::ResourceCeilingError& e) {
        std::cerr << "resource ceiling: " << e.what()
                  << " (pairs considered: " << e.stats.pairs_considered << ")\n";
        return kExitResourceCeiling;
    } catch (const kmu::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
