#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <boost/program_options.hpp>

#include "checks.hpp"
#include "loopblocks/json_io.hpp"

namespace loopblocks::cli {

namespace po = boost::program_options;

namespace {

constexpr const char *usage = R"(usage: loopblocks <command> [options]

commands:
  info     --type T --m M                 folded system and P/Q
  fold     --type T --m M --poly P         the folding map r
  fiber    --type T --m M --twisted Q      all preimages under r
  char     --type T --m M --poly P         spectral character and its symmetrization
  blocks   --type T --m M --p X --q Y      block labels and whether they agree
  chain    --type T --from W --to W [--bound N]
  selftest [--seed S]                     brute-force oracle suites

common options:
  --format text|json   output format (default json)

Polynomials are JSON, inline or @file (@- for stdin). Weights are
comma-separated integers. blocks accepts twisted or ordinary polynomials;
ordinary ones are folded first.)";

struct Refusal : std::runtime_error {
    int code;
    Refusal(int c, const std::string &what) : std::runtime_error(what), code(c) {}
};

std::string slurp(const std::string &value)
{
    if (value.empty() || value[0] != '@') {
        return value;
    }
    const std::string path = value.substr(1);
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot read " + path);
    }
    ss << in.rdbuf();
    return ss.str();
}

Weight parse_weight(const std::string &text)
{
    Weight w;
    std::vector<std::int64_t> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            coords.push_back(std::stoll(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::logic_error &) {
            throw Error(ErrorKind::ParseError, "weight '" + text + "' is not a comma-separated integer list");
        }
    }
    return Weight(std::span<const std::int64_t>(coords));
}

std::string coord_text(const Coordinate &c)
{
    return c.zeta == 0 ? c.sym : "zeta^" + std::to_string(c.zeta) + " " + c.sym;
}

std::string text(const DrinfeldPoly &p)
{
    if (p.empty()) {
        return "1";
    }
    std::string out;
    for (const auto &[c, w] : p.support()) {
        out += (out.empty() ? "" : " * ") + std::string("pi(") + json(w).dump() + ", " + coord_text(c) + ")";
    }
    return out;
}

std::string text(const TwistedPoly &p)
{
    if (p.empty()) {
        return "1";
    }
    std::string out;
    for (const auto &[k, roots] : p.comps()) {
        out += (out.empty() ? "" : "; ") + std::string("node ") + std::to_string(k + 1) + ":";
        for (const auto &[root, mult] : roots) {
            out += " " + coord_text(root) + " x" + std::to_string(mult);
        }
    }
    return out;
}

std::string text(const SpectralCharacter &x)
{
    if (x.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[c, v] : x.support()) {
        out += (out.empty() ? "" : ", ") + coord_text(c) + " -> " + json(v).dump();
    }
    return out;
}

std::string text(const Chain &c)
{
    std::string out = json(c.steps.front()).dump();
    for (std::size_t i = 0; i < c.directions.size(); ++i) {
        out += (c.directions[i] == Direction::Up ? " -up-> " : " -down-> ") + json(c.steps[i + 1]).dump();
    }
    return out;
}

std::string context_text(const json &ctx)
{
    std::ostringstream os;
    os << "type " << ctx.at("type").get<std::string>();
    if (ctx.contains("m")) {
        os << ", m = " << ctx.at("m") << ", folded " << ctx.at("folded").get<std::string>() << "\n";
        os << "orbits " << ctx.at("orbits").dump() << ", stabilizers " << ctx.at("stabilizers").dump();
    }
    os << "\ninvariant factors of P/Q: " << ctx.at("invariant_factors").dump() << "\n";
    return os.str();
}

class Session {
public:
    Session(const std::vector<std::string> &args, std::ostream &out) : out_(out)
    {
        command_ = args.empty() ? "" : args[0];
        desc_.add_options()("type", po::value<std::string>(), "")("m", po::value<int>()->default_value(2), "")(
            "format", po::value<std::string>()->default_value("json"), "")("poly", po::value<std::string>(), "")(
            "twisted", po::value<std::string>(), "")("p", po::value<std::string>(), "")(
            "q", po::value<std::string>(), "")("from", po::value<std::string>(), "")(
            "to", po::value<std::string>(), "")("bound", po::value<std::int64_t>(), "")(
            "seed", po::value<std::uint64_t>()->default_value(20261015), "")("help,h", "");
        const std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
        po::store(po::command_line_parser(rest).options(desc_).run(), vm_);
        format_ = vm_["format"].as<std::string>();
        if (format_ != "json" && format_ != "text") {
            throw Error(ErrorKind::ParseError, "--format must be text or json");
        }
    }

    int dispatch()
    {
        if (command_.empty() || command_ == "help" || command_ == "--help" || command_ == "-h" || vm_.count("help")) {
            out_ << usage << "\n";
            return command_.empty() ? InvalidInput : Ok;
        }
        if (command_ == "info") {
            return info();
        }
        if (command_ == "fold") {
            return fold_cmd();
        }
        if (command_ == "fiber") {
            return fiber_cmd();
        }
        if (command_ == "char") {
            return char_cmd();
        }
        if (command_ == "blocks") {
            return blocks();
        }
        if (command_ == "chain") {
            return chain();
        }
        if (command_ == "selftest") {
            return selftest();
        }
        throw Error(ErrorKind::ParseError, "unknown command '" + command_ + "'");
    }

private:
    std::string required(const char *name) const
    {
        if (!vm_.count(name)) {
            throw Error(ErrorKind::ParseError, std::string("missing --") + name);
        }
        return vm_[name].as<std::string>();
    }

    FoldedSystem folding() const { return build_folding(required("type"), vm_["m"].as<int>()); }

    template <class T>
    T payload(const char *name) const
    {
        return parse_json<T>(slurp(required(name)));
    }

    void check_poly(const FoldedSystem &fs, const DrinfeldPoly &p) const
    {
        for (const auto &[c, w] : p.support()) {
            fs.ambient().check_rank(w);
            check_coordinate(c, fs.m());
        }
    }

    TwistedPoly twisted_or_folded(const FoldedSystem &fs, const char *name) const
    {
        const json j = parse_json<json>(slurp(required(name)));
        if (j.is_object() && j.contains("support")) {
            const auto p = j.get<DrinfeldPoly>();
            check_poly(fs, p);
            return fold(fs, p);
        }
        auto t = j.get<TwistedPoly>();
        validate_twisted(fs, t);
        return t;
    }

    void emit(const json &context, const json &result, const std::string &rendered)
    {
        if (format_ == "json") {
            out_ << json{{"command", command_}, {"context", context}, {"result", result}}.dump(2) << "\n";
        } else {
            out_ << context_text(context) << rendered;
        }
    }

    int info()
    {
        const FoldedSystem fs = folding();
        emit(summary(fs), json::object(), "");
        return Ok;
    }

    int fold_cmd()
    {
        const FoldedSystem fs = folding();
        const auto p = payload<DrinfeldPoly>("poly");
        check_poly(fs, p);
        const TwistedPoly t = fold(fs, p);
        emit(summary(fs), json{{"twisted", t}}, "r(" + text(p) + ") = " + text(t) + "\n");
        return Ok;
    }

    int fiber_cmd()
    {
        const FoldedSystem fs = folding();
        auto t = payload<TwistedPoly>("twisted");
        validate_twisted(fs, t);
        const auto members = fiber(fs, t);
        std::string rendered = "fiber of " + text(t) + ": " + std::to_string(members.size()) + " polynomials\n";
        for (const auto &q : members) {
            rendered += "  " + text(q) + "\n";
        }
        emit(summary(fs), json{{"twisted", t}, {"fiber", members}}, rendered);
        return Ok;
    }

    int char_cmd()
    {
        const FoldedSystem fs = folding();
        const auto p = payload<DrinfeldPoly>("poly");
        check_poly(fs, p);
        const SpectralCharacter x = char_of(fs.ambient(), p);
        const SpectralCharacter s = symmetrize(fs, x);
        emit(summary(fs), json{{"character", x}, {"symmetrized", s}},
             "character: " + text(x) + "\nsymmetrized: " + text(s) + "\n");
        return Ok;
    }

    int blocks()
    {
        const FoldedSystem fs = folding();
        const TwistedPoly p = twisted_or_folded(fs, "p");
        const TwistedPoly q = twisted_or_folded(fs, "q");
        const BlockLabel lp = block_label(fs, p);
        const BlockLabel lq = block_label(fs, q);
        const bool same = lp == lq;
        emit(summary(fs), json{{"same_block", same}, {"label_p", lp}, {"label_q", lq}},
             std::string("same block: ") + (same ? "yes" : "no") + "\nlabel p: " + text(lp.canon)
                 + "\nlabel q: " + text(lq.canon) + "\n");
        return Ok;
    }

    int chain()
    {
        const RootSystem rs = build_root_system(required("type"));
        const Weight from = parse_weight(required("from"));
        const Weight to = parse_weight(required("to"));
        rs.check_rank(from);
        rs.check_rank(to);
        const std::int64_t bound = vm_.count("bound") ? vm_["bound"].as<std::int64_t>() : -1;
        if (vm_.count("bound") && bound < 0) {
            throw Error(ErrorKind::ParseError, "--bound must be nonnegative");
        }
        const ChainSearch s = linkage_chain(rs, to, from, bound);
        const json context{{"type", rs.label()}, {"invariant_factors", rs.invariant_factors()}};
        switch (s.status) {
        case ChainStatus::Found:
            emit(context, json{{"chain", *s.chain}, {"bound", s.bound}},
                 text(*s.chain) + "\nlength " + std::to_string(s.chain->length()) + "\n");
            return Ok;
        case ChainStatus::NotInRootLattice:
            emit(context, json{{"refusal", "NotInRootLattice"}}, "refused: NotInRootLattice\n");
            throw Refusal(Refused, "NotInRootLattice: " + json(to).dump() + " - " + json(from).dump()
                                       + " is not in the root lattice");
        case ChainStatus::NotFoundWithinBound:
            emit(context, json{{"refusal", "NotFoundWithinBound"}, {"bound", s.bound}},
                 "refused: NotFoundWithinBound\n");
            throw Refusal(BoundExhausted,
                          "NotFoundWithinBound: no chain with slack " + std::to_string(s.bound)
                              + "; this does not mean no chain exists");
        }
        return Internal;
    }

    int selftest()
    {
        using namespace oracle;
        const auto seed = vm_["seed"].as<std::uint64_t>();
        std::vector<CheckResult> results{
            timed("fundamental groups", [] { return check_fundamental_groups(); }),
            timed("fiber completeness", [&] { return check_fiber_completeness(seed, 40); }),
            timed("worked fibers", [] { return check_worked_fibers(); }),
            timed("character well-definedness", [&] { return check_character_well_defined(seed, 80); }),
            timed("sigma dual path", [&] { return check_sigma_dual_path(seed, 120); }),
            timed("monoid homomorphisms", [&] { return check_homomorphisms(seed, 200); }),
            timed("tensor oracle", [] { return check_tensor_oracle(1); }),
            timed("linkage dichotomy", [] { return check_linkage_dichotomy(2); }),
            timed("block coherence", [&] { return check_block_coherence(seed, 60); }),
            timed("weyl/freudenthal", [] { return check_weyl_freudenthal(1, true); }),
        };
        bool all = true;
        json arr = json::array();
        std::string rendered;
        for (const auto &r : results) {
            all = all && r.pass;
            arr.push_back(json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
            rendered += std::string(r.pass ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
        }
        if (format_ == "json") {
            out_ << json{{"command", "selftest"}, {"seed", seed}, {"pass", all}, {"checks", arr}}.dump(2) << "\n";
        } else {
            out_ << rendered;
        }
        return all ? Ok : Internal;
    }

    std::string command_;
    std::string format_;
    po::options_description desc_;
    po::variables_map vm_;
    std::ostream &out_;
};

int exit_code(ErrorKind kind)
{
    return kind == ErrorKind::NoSuchAutomorphism ? Refused : kind == ErrorKind::Overflow ? Internal : InvalidInput;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    try {
        Session session(args, out);
        return session.dispatch();
    } catch (const Refusal &e) {
        err << e.what() << "\n";
        return e.code;
    } catch (const Error &e) {
        err << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const po::error &e) {
        err << "ParseError: " << e.what() << "\n";
        return InvalidInput;
    } catch (const json::exception &e) {
        err << "ParseError: " << e.what() << "\n";
        return InvalidInput;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return Internal;
    }
}

} // namespace loopblocks::cli
