#include "commands.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pathrep/serialize.hpp"
#include "pathrep/subcat.hpp"
#include "pathrep/tamari.hpp"
#include "pathrep/tilting.hpp"
#include "pathrep/verify.hpp"

namespace pathrep::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
    int n = 0;  // 0 means not given
    unsigned prime = 2;
    std::string format = "plain";
    std::string output;
    int jobs = 1;
    int unsafe_n = 0;
};

int emit(const Options& opt, std::ostream& out, std::ostream& err, const std::string& payload) {
    if (opt.output.empty()) {
        out << payload;
        return 0;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << opt.output << "' for writing\n";
        return 1;
    }
    file << payload;
    file.close();
    if (!file) {
        err << "error: writing '" << opt.output << "' failed\n";
        return 1;
    }
    return 0;
}

int reject_format(const std::string& command, const Options& opt, std::ostream& err) {
    err << "error: format '" << opt.format << "' is not available for '" << command << "'\n";
    return 2;
}

int require_rank(const std::string& command, const Options& opt, std::ostream& err) {
    if (opt.n >= 1) return 0;
    err << "error: '" << command << "' requires -n\n";
    return 2;
}

/// The rank implied by the inputs must match -n when both are present.
void check_rank_consistency(int implied, const Options& opt) {
    if (opt.n != 0 && opt.n != implied)
        throw std::invalid_argument("the input has rank " + std::to_string(implied) +
                                    " but -n gives " + std::to_string(opt.n));
}

ordered_json element_json(int id, const BracketVector& b) {
    ordered_json e;
    e["id"] = id;
    e["a"] = b.avector().entries();
    e["bracket"] = decode(b).str();
    return e;
}

int enumerate_cmd(const Options& opt, std::ostream& out, std::ostream& err) {
    if (int rc = require_rank("enumerate", opt, err)) return rc;
    const auto elems = enumerate_bracket_vectors(opt.n);
    std::string payload;
    if (opt.format == "plain") {
        std::ostringstream os;
        for (const auto& e : elems) os << e.to_string() << "\n";
        os << "count=" << elems.size() << "\n";
        payload = os.str();
    } else if (opt.format == "json") {
        ordered_json root;
        root["n"] = opt.n;
        root["count"] = elems.size();
        ordered_json list = ordered_json::array();
        for (std::size_t i = 0; i < elems.size(); ++i)
            list.push_back(element_json(static_cast<int>(i), elems[i]));
        root["elements"] = std::move(list);
        payload = root.dump(2) + "\n";
    } else {
        return reject_format("enumerate", opt, err);
    }
    return emit(opt, out, err, payload);
}

int hasse_cmd(const Options& opt, std::ostream& out, std::ostream& err) {
    if (int rc = require_rank("hasse", opt, err)) return rc;
    const auto elems = enumerate_bracket_vectors(opt.n);
    const Poset p = hasse(opt.n);
    std::string payload;
    if (opt.format == "plain") {
        std::ostringstream os;
        os << "elements " << p.size() << "\n";
        for (int i = 0; i < p.size(); ++i)
            os << i << " " << elems[static_cast<std::size_t>(i)].to_string() << "\n";
        os << "covers " << p.covers.size() << "\n";
        for (const auto& [lo, hi] : p.covers) os << lo << " " << hi << "\n";
        payload = os.str();
    } else if (opt.format == "json") {
        payload = tamari_poset_json(opt.n, elems, p) + "\n";
    } else {
        payload = tamari_poset_dot(opt.n, elems, p);
    }
    return emit(opt, out, err, payload);
}

int encode_cmd(const Options& opt, std::ostream& out, std::ostream& err, const std::string& input) {
    const BracketString s(input);
    check_rank_consistency(s.rank(), opt);
    const BracketVector b = encode(s);
    std::string payload;
    if (opt.format == "plain") {
        payload = b.to_string() + "\n";
    } else if (opt.format == "json") {
        ordered_json root;
        root["bracket"] = input;
        root["a"] = b.avector().entries();
        payload = root.dump(2) + "\n";
    } else {
        return reject_format("encode", opt, err);
    }
    return emit(opt, out, err, payload);
}

int decode_cmd(const Options& opt, std::ostream& out, std::ostream& err, const std::string& input) {
    const AVector a = AVector::parse(input);
    check_rank_consistency(a.rank(), opt);
    const BracketVector b = BracketVector::checked(a);
    const BracketString s = decode(b);
    std::string payload;
    if (opt.format == "plain") {
        payload = s.str() + "\n";
    } else if (opt.format == "json") {
        ordered_json root;
        root["a"] = b.avector().entries();
        root["bracket"] = s.str();
        payload = root.dump(2) + "\n";
    } else {
        return reject_format("decode", opt, err);
    }
    return emit(opt, out, err, payload);
}

int lattice_op_cmd(const Options& opt, std::ostream& out, std::ostream& err, const std::string& op,
                   const std::string& lhs_text, const std::string& rhs_text) {
    const AVector la = AVector::parse(lhs_text);
    const AVector ra = AVector::parse(rhs_text);
    if (la.rank() != ra.rank())
        throw std::invalid_argument("operands have ranks " + std::to_string(la.rank()) + " and " +
                                    std::to_string(ra.rank()));
    check_rank_consistency(la.rank(), opt);
    const BracketVector lhs = BracketVector::checked(la);
    const BracketVector rhs = BracketVector::checked(ra);
    const BracketVector result = (op == "meet") ? meet(lhs, rhs) : join(lhs, rhs);
    std::string payload;
    if (opt.format == "plain") {
        payload = result.to_string() + "\n";
    } else if (opt.format == "json") {
        ordered_json root;
        root["lhs"] = lhs.avector().entries();
        root["rhs"] = rhs.avector().entries();
        root[op] = result.avector().entries();
        payload = root.dump(2) + "\n";
    } else {
        return reject_format(op, opt, err);
    }
    return emit(opt, out, err, payload);
}

int verify_cmd(const Options& opt, std::ostream& out, std::ostream& err) {
    if (int rc = require_rank("verify", opt, err)) return rc;
    if (opt.format == "dot") return reject_format("verify", opt, err);
    const auto results = verify_all(opt.n, opt.prime, opt.jobs, opt.unsafe_n);
    std::size_t failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    std::string payload;
    if (opt.format == "plain") {
        std::ostringstream os;
        for (const auto& r : results)
            os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        if (failed == 0)
            os << "all " << results.size() << " suites passed\n";
        else
            os << failed << " of " << results.size() << " suites failed\n";
        payload = os.str();
    } else {
        ordered_json root = ordered_json::array();
        for (const auto& r : results) {
            ordered_json e;
            e["name"] = r.name;
            e["passed"] = r.passed;
            e["detail"] = r.detail;
            root.push_back(std::move(e));
        }
        payload = root.dump(2) + "\n";
    }
    if (int rc = emit(opt, out, err, payload)) return rc;
    return failed == 0 ? 0 : 1;
}

int tilting_cmd(const Options& opt, std::ostream& out, std::ostream& err) {
    if (int rc = require_rank("tilting", opt, err)) return rc;
    const int limit = std::max(6, opt.unsafe_n);
    if (opt.n > limit)
        throw std::invalid_argument("tilting enumeration is capped at n=" + std::to_string(limit) +
                                    "; raise --unsafe-n to go further");
    const auto tilts = enumerate_tilting(opt.n);
    std::string payload;
    if (opt.format == "plain") {
        std::ostringstream os;
        for (std::size_t i = 0; i < tilts.size(); ++i)
            os << i << " " << tilts[i].to_string() << " gen="
               << gen(IntervalSet(opt.n, tilts[i].summands())).to_string() << "\n";
        os << "count=" << tilts.size() << "\n";
        payload = os.str();
    } else if (opt.format == "json") {
        payload = rs_poset_json(opt.n, tilts, rs_poset(opt.n)) + "\n";
    } else {
        payload = poset_dot(rs_poset(opt.n), "tilting_" + std::to_string(opt.n));
    }
    return emit(opt, out, err, payload);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Tamari lattices as torsion classes of linear path-quiver representations"};
    app.name("pathrep");
    app.require_subcommand(1);

    app.add_option("-n,--rank", opt.n, "ambient rank (number of quiver vertices)")
        ->check(CLI::PositiveNumber);
    app.add_option("--prime", opt.prime, "field characteristic for the matrix checks")
        ->check(CLI::IsMember({2, 3, 5, 7}))
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "dot"}))
        ->capture_default_str();
    app.add_option("-o,--output", opt.output, "write the result to this file instead of stdout");
    app.add_option("--jobs", opt.jobs, "worker threads for the brute-force scans")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--unsafe-n", opt.unsafe_n, "raise the hard size caps (may take very long)")
        ->check(CLI::NonNegativeNumber);

    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "list the bracket vectors of rank n in lexicographic order");
    auto* cmd_hasse = app.add_subcommand("hasse", "the Tamari lattice of rank n with its covers");
    auto* cmd_encode = app.add_subcommand("encode", "bracket vector of a balanced bracket string");
    auto* cmd_decode = app.add_subcommand("decode", "balanced bracket string of a bracket vector");
    auto* cmd_meet = app.add_subcommand("meet", "greatest lower bound of two bracket vectors");
    auto* cmd_join = app.add_subcommand("join", "least upper bound of two bracket vectors");
    auto* cmd_verify =
        app.add_subcommand("verify", "run the cross-check suites up to rank n (capped per suite)");
    auto* cmd_tilting = app.add_subcommand("tilting", "tilting objects of rank n and their poset");

    std::string encode_input;
    std::string decode_input;
    std::string lhs_text;
    std::string rhs_text;
    cmd_encode->add_option("string", encode_input, "balanced string such as '(()())'")->required();
    cmd_decode->add_option("vector", decode_input, "comma-separated entries such as '2,0'")->required();
    cmd_meet->add_option("lhs", lhs_text, "left operand, comma-separated")->required();
    cmd_meet->add_option("rhs", rhs_text, "right operand, comma-separated")->required();
    cmd_join->add_option("lhs", lhs_text, "left operand, comma-separated")->required();
    cmd_join->add_option("rhs", rhs_text, "right operand, comma-separated")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_enumerate)) return enumerate_cmd(opt, out, err);
        if (app.got_subcommand(cmd_hasse)) return hasse_cmd(opt, out, err);
        if (app.got_subcommand(cmd_encode)) return encode_cmd(opt, out, err, encode_input);
        if (app.got_subcommand(cmd_decode)) return decode_cmd(opt, out, err, decode_input);
        if (app.got_subcommand(cmd_meet)) return lattice_op_cmd(opt, out, err, "meet", lhs_text, rhs_text);
        if (app.got_subcommand(cmd_join)) return lattice_op_cmd(opt, out, err, "join", lhs_text, rhs_text);
        if (app.got_subcommand(cmd_verify)) return verify_cmd(opt, out, err);
        if (app.got_subcommand(cmd_tilting)) return tilting_cmd(opt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command selected\n";
    return 2;
}

}  // namespace pathrep::cli
