#include "akb/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "akb/brauer_line.hpp"
#include "akb/classify.hpp"

namespace akb::cli {

using json = nlohmann::json;

namespace {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Tsv, Ascii };

json e_json(const QuantumChar& e) { return e.is_finite() ? json(e.value()) : json("inf"); }

json partition_json(const Partition& p) { return json(p.parts()); }

json multipartition_json(const Multipartition& m)
{
    json out = json::array();
    for (const auto& p : m.components())
        out.push_back(partition_json(p));
    return out;
}

json pair_json(const AbacusPair& a)
{
    return {{"e", e_json(a.e())},
            {"multicharge", a.charge().values()},
            {"multipartition", multipartition_json(a.multipartition())}};
}

json ops_json(const OperationSet& set)
{
    json out = json::array();
    for (const auto& op : set.ops)
        out.push_back({{"row", op.source.row}, {"col", op.source.col}, {"index", op.bead_index}});
    return out;
}

json content_json(const ResidueContent& c)
{
    json out = json::array();
    for (const auto& [f, k] : c)
        out.push_back({{"residue", f}, {"count", k}});
    return out;
}

json block_json(const BlockId& b)
{
    return {{"e", e_json(b.e)}, {"multicharge", b.multicharge.values()}, {"content", content_json(b.content)}, {"n", b.n}};
}

json witness_json(const std::optional<IncomparabilityWitness>& w)
{
    if (!w)
        return nullptr;
    return {{"multicharge", w->charge.values()},
            {"mu", multipartition_json(w->mu)},
            {"nu", multipartition_json(w->nu)},
            {"kappa1", w->coords.kappa1},
            {"iota1", w->coords.iota1},
            {"kappa2", w->coords.kappa2},
            {"iota2", w->coords.iota2},
            {"sigma", w->sigma},
            {"construction", w->source}};
}

json detail_json(const ReprTypeReport& rep)
{
    json d = {{"kind", to_string(rep.detail)}};
    if (rep.degree)
        d["degree"] = *rep.degree;
    if (rep.edges)
        d["edges"] = *rep.edges;
    return d;
}

json report_json(const ReprTypeReport& rep)
{
    return {{"verdict", to_string(rep.verdict)},
            {"weight", rep.weight},
            {"block_moving_vector", rep.block_moving_vector},
            {"normalized_multicharge", rep.normalized_charge.values()},
            {"normalization", rep.normalization},
            {"normalized_multipartition", multipartition_json(rep.normalized_multipartition)},
            {"detail", detail_json(rep)},
            {"witness", witness_json(rep.witness)},
            {"witness_budget_exhausted", rep.witness_budget_exhausted}};
}

json subabacus_json(const SubabacusMV& w)
{
    json out = json::array();
    for (const auto& [c, k] : w)
        out.push_back({{"class", c}, {"count", k}});
    return out;
}

QuantumChar parse_e(const json& j)
{
    if (j.is_string() && j.get<std::string>() == "inf")
        return QuantumChar::infinity();
    if (j.is_number_integer())
        return QuantumChar::finite(j.get<int>());
    throw ParseError("\"e\" must be an integer >= 2 or \"inf\"");
}

std::vector<int> parse_ints(const json& j, const std::string& what)
{
    if (!j.is_array())
        throw ParseError("\"" + what + "\" must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ParseError("\"" + what + "\" must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Multipartition parse_multipartition(const json& j)
{
    if (!j.is_array() || j.empty())
        throw ParseError("\"multipartition\" must be a non-empty array of arrays");
    std::vector<Partition> comps;
    for (const auto& p : j) {
        auto parts = parse_ints(p, "multipartition");
        for (int x : parts)
            if (x < 1)
                throw ParseError("multipartition parts must be positive integers");
        comps.emplace_back(parts);
    }
    return Multipartition(comps);
}

struct Job {
    json raw;
    QuantumChar e = QuantumChar::infinity();
    Multicharge s;
    std::optional<Multipartition> lambda;

    AbacusPair pair() const
    {
        if (!lambda)
            throw ParseError("this command needs a \"multipartition\"");
        return AbacusPair(*lambda, s, e);
    }
};

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

Job parse_job(const std::string& text_or_ref, std::istream& in)
{
    std::string text = text_or_ref;
    if (text.empty() || text == "-") {
        text = slurp(in);
    } else if (text[0] == '@') {
        std::ifstream f(text.substr(1));
        if (!f)
            throw ParseError("cannot open " + text.substr(1));
        text = slurp(f);
    }
    Job job;
    try {
        job.raw = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!job.raw.is_object())
        throw ParseError("a job must be a JSON object");
    if (!job.raw.contains("e"))
        throw ParseError("missing \"e\"");
    if (!job.raw.contains("multicharge"))
        throw ParseError("missing \"multicharge\"");
    try {
        job.e = parse_e(job.raw["e"]);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    job.s = Multicharge(parse_ints(job.raw["multicharge"], "multicharge"));
    if (job.s.rank() < 1)
        throw ParseError("\"multicharge\" must not be empty");
    if (job.raw.contains("multipartition")) {
        try {
            job.lambda = parse_multipartition(job.raw["multipartition"]);
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
        if (job.lambda->rank() != job.s.rank())
            throw ParseError("multipartition and multicharge have different lengths");
    }
    return job;
}

std::string tsv_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const json& doc, Format fmt, std::ostream& out, const std::vector<std::pair<std::string, AbacusPair>>& abaci)
{
    if (fmt == Format::Json) {
        out << doc.dump(2) << '\n';
        return;
    }
    if (fmt == Format::Ascii && !abaci.empty()) {
        bool first = true;
        for (const auto& [label, a] : abaci) {
            out << (first ? "" : "\n") << label << '\n' << render(a) << '\n';
            first = false;
        }
        return;
    }
    if (fmt == Format::Tsv && doc.contains("blocks") && doc["blocks"].is_array() && !doc["blocks"].empty()) {
        std::vector<std::string> keys;
        for (auto it = doc["blocks"][0].begin(); it != doc["blocks"][0].end(); ++it)
            keys.push_back(it.key());
        for (std::size_t k = 0; k < keys.size(); ++k)
            out << (k ? "\t" : "") << keys[k];
        out << '\n';
        for (const auto& row : doc["blocks"]) {
            for (std::size_t k = 0; k < keys.size(); ++k)
                out << (k ? "\t" : "") << tsv_value(row.value(keys[k], json()));
            out << '\n';
        }
        return;
    }
    const char* sep = fmt == Format::Tsv ? "\t" : ": ";
    for (auto it = doc.begin(); it != doc.end(); ++it)
        out << it.key() << sep << tsv_value(it.value()) << '\n';
}

void write_error(std::ostream& err, const std::string& code, const std::string& message)
{
    err << json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"abacus calculus for blocks of Ariki-Koike algebras", "akb"};
    app.require_subcommand(1);
    app.fallthrough();
    bool tsv = false, ascii = false;
    std::optional<std::uint64_t> budget_flag;
    std::optional<std::uint64_t> comparisons_flag;
    app.add_flag("--tsv", tsv, "tab separated output");
    app.add_flag("--ascii", ascii, "plain text output with abacus drawings");
    app.add_option("--budget", budget_flag, "enumeration budget (candidates)");
    app.add_option("--comparisons", comparisons_flag, "pairwise comparison budget for witness search");

    std::vector<std::string> jobs;
    int sigma_j = 0, rotate_i = 0, enum_n = 0, orbit_depth = 20;
    int line_n = 0, line_v = 0, line_m = 0;
    std::optional<std::pair<int, int>> window;

    auto job_cmd = [&](const std::string& name, const std::string& help, int max_jobs = 1) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("job", jobs, "JSON job, @file, or - for stdin")->expected(0, max_jobs);
        return sub;
    };
    auto* c_core = job_cmd("core", "core abacus, operation set and moving vector");
    auto* c_mv = job_cmd("mv", "moving vector between two abaci", 2);
    auto* c_block = job_cmd("block-id", "block identifier");
    auto* c_defect = job_cmd("defect", "weight of the block");
    auto* c_classify = job_cmd("classify", "representation type of the block");
    auto* c_schur = job_cmd("schur-classify", "representation type of the q-Schur block");
    auto* c_enum = job_cmd("enumerate", "table of all blocks of a given size");
    c_enum->add_option("--n", enum_n, "number of nodes")->required();
    auto* c_witness = job_cmd("witness", "pair of incomparable abaci in the block");
    auto* c_sigma = app.add_subcommand("sigma", "Weyl reflection on the abacus");
    c_sigma->add_option("j", sigma_j, "residue")->required();
    c_sigma->add_option("job", jobs)->expected(0, 1);
    auto* c_uglov = job_cmd("uglov", "image under the Uglov map");
    auto* c_dual = job_cmd("dual", "dual abacus");
    auto* c_rotate = app.add_subcommand("rotate", "move the first i rows to the top");
    c_rotate->add_option("i", rotate_i, "rows to rotate")->required();
    c_rotate->add_option("job", jobs)->expected(0, 1);
    auto* c_derived = job_cmd("derived-class", "subabacus moving vector of a weight one block", 2);
    auto* c_orbit = job_cmd("orbit", "search the Weyl orbit between two blocks", 2);
    c_orbit->add_option("--depth", orbit_depth, "maximum number of reflections");
    auto* c_line = app.add_subcommand("brauer-line", "cell chains of a straight-line Brauer tree");
    c_line->add_option("n", line_n, "edges")->required();
    c_line->add_option("v", line_v, "exceptional vertex")->required();
    c_line->add_option("m", line_m, "multiplicity")->required();
    auto* c_render = job_cmd("render", "draw the abacus");
    c_render->add_option("--window", window, "first and last column");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        write_error(err, "parse_error", e.what());
        return ParseFailure;
    }

    Format fmt = tsv ? Format::Tsv : (ascii ? Format::Ascii : Format::Json);
    try {
        Budget budget = Budget::from_env();
        if (budget_flag)
            budget.enumeration = *budget_flag;
        if (comparisons_flag)
            budget.comparisons = *comparisons_flag;

        auto need_jobs = [&](std::size_t k) {
            std::vector<Job> out_jobs;
            for (std::size_t i = 0; i < k; ++i)
                out_jobs.push_back(parse_job(i < jobs.size() ? jobs[i] : std::string("-"), in));
            return out_jobs;
        };
        json doc;
        std::vector<std::pair<std::string, AbacusPair>> abaci;
        int code = Ok;

        if (c_core->parsed()) {
            auto a = need_jobs(1)[0].pair();
            auto c = core(a);
            doc = {{"command", "core"},
                   {"input", pair_json(a)},
                   {"core", pair_json(c.core)},
                   {"operations", ops_json(c.ops)},
                   {"moving_vector", c.moving_vector}};
            abaci = {{"input", a}, {"core", c.core}};
        } else if (c_mv->parsed()) {
            if (jobs.size() != 2)
                throw ParseError("mv needs two jobs");
            auto js = need_jobs(2);
            auto a = js[0].pair(), b = js[1].pair();
            auto ops = operations_between(a, b);
            doc = {{"command", "mv"},
                   {"source", pair_json(a)},
                   {"target", pair_json(b)},
                   {"operations", ops_json(ops)},
                   {"moving_vector", tally(ops, a.rank())}};
            abaci = {{"source", a}, {"target", b}};
        } else if (c_block->parsed()) {
            doc = {{"command", "block-id"}, {"block", block_json(block_id(need_jobs(1)[0].pair()))}};
        } else if (c_defect->parsed()) {
            auto b = block_id(need_jobs(1)[0].pair());
            doc = {{"command", "defect"}, {"block", block_json(b)}, {"defect", defect(b)}};
        } else if (c_classify->parsed()) {
            auto rep = repr_type(need_jobs(1)[0].pair(), budget);
            doc = report_json(rep);
            doc["command"] = "classify";
            if (rep.witness_budget_exhausted)
                code = BudgetExhausted;
        } else if (c_schur->parsed()) {
            auto rep = repr_type(need_jobs(1)[0].pair(), budget, false);
            doc = {{"command", "schur-classify"},
                   {"verdict", to_string(schur_repr_type(rep))},
                   {"hecke_verdict", to_string(rep.verdict)},
                   {"weight", rep.weight}};
        } else if (c_enum->parsed()) {
            auto job = need_jobs(1)[0];
            if (enum_n < 0)
                throw ParseError("--n must be non-negative");
            auto estimate = count_multipartitions(job.s.rank(), enum_n);
            if (estimate > budget.enumeration)
                throw Error(ErrorCode::Budget, "enumeration would scan " + estimate.str() + " multipartitions");
            std::map<ResidueContent, std::vector<Multipartition>> blocks;
            for (auto& m : multipartitions_of(job.s.rank(), enum_n))
                blocks[residue_content(m, job.s, job.e)].push_back(m);
            json rows = json::array();
            for (const auto& [content, members] : blocks) {
                AbacusPair a(members.front(), job.s, job.e);
                auto rep = repr_type(a, budget, false);
                rows.push_back({{"content", content_json(content)},
                                {"members", members.size()},
                                {"defect", defect(block_id(a))},
                                {"block_moving_vector", rep.block_moving_vector},
                                {"verdict", to_string(rep.verdict)},
                                {"detail", to_string(rep.detail)}});
            }
            doc = {{"command", "enumerate"},
                   {"e", e_json(job.e)},
                   {"multicharge", job.s.values()},
                   {"n", enum_n},
                   {"blocks", rows}};
        } else if (c_witness->parsed()) {
            auto a = need_jobs(1)[0].pair();
            std::optional<IncomparabilityWitness> w;
            bool exhausted = false;
            try {
                w = find_incomparable_pair(a, budget);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Budget)
                    throw;
                exhausted = true;
            }
            doc = {{"command", "witness"}, {"witness", witness_json(w)}, {"budget_exhausted", exhausted}};
            if (exhausted)
                code = BudgetExhausted;
        } else if (c_sigma->parsed()) {
            auto a = need_jobs(1)[0].pair();
            auto b = weyl_sigma(a, sigma_j);
            doc = {{"command", "sigma"}, {"j", sigma_j}, {"input", pair_json(a)}, {"result", pair_json(b)}};
            abaci = {{"input", a}, {"result", b}};
        } else if (c_uglov->parsed()) {
            auto u = uglov(need_jobs(1)[0].pair());
            doc = {{"command", "uglov"}, {"partition", partition_json(u.partition)}, {"charge", u.charge}};
        } else if (c_dual->parsed()) {
            auto a = need_jobs(1)[0].pair();
            auto d = dual(a);
            doc = {{"command", "dual"}, {"input", pair_json(a)}, {"result", pair_json(d)}};
            abaci = {{"input", a}, {"result", d}};
        } else if (c_rotate->parsed()) {
            auto a = need_jobs(1)[0].pair();
            auto b = rotate_rows(a, rotate_i);
            doc = {{"command", "rotate"}, {"i", rotate_i}, {"input", pair_json(a)}, {"result", pair_json(b)}};
            abaci = {{"input", a}, {"result", b}};
        } else if (c_derived->parsed()) {
            auto js = need_jobs(std::max<std::size_t>(1, jobs.size()));
            json blocks = json::array();
            std::vector<BlockId> ids;
            for (const auto& j : js) {
                auto b = block_id(j.pair());
                if (defect(b) != 1)
                    throw Error(ErrorCode::Precondition, "derived-class needs weight one blocks");
                auto w = subabacus_moving_vector(b, budget);
                blocks.push_back({{"block", block_json(b)},
                                  {"subabacus_moving_vector", subabacus_json(w)},
                                  {"nonzero_components", nonzero_components(w)}});
                ids.push_back(b);
            }
            doc = {{"command", "derived-class"}, {"blocks", blocks}};
            if (ids.size() == 2)
                doc["derived_equivalent"] = derived_equivalent_weight1(ids[0], ids[1], budget);
        } else if (c_orbit->parsed()) {
            if (jobs.size() != 2)
                throw ParseError("orbit needs two jobs");
            auto js = need_jobs(2);
            auto b1 = block_id(js[0].pair()), b2 = block_id(js[1].pair());
            auto res = orbit_reachable(b1, b2, orbit_depth);
            doc = {{"command", "orbit"},
                   {"result", res.found ? "Yes" : "NotFoundWithin"},
                   {"depth", orbit_depth},
                   {"word", res.word}};
        } else if (c_line->parsed()) {
            BrauerLine line{line_n, line_v, line_m};
            auto [one, two] = cell_chains(line);
            auto chain_json = [](const CellChain& c) {
                json out = json::array();
                for (const auto& d : c)
                    out.push_back({{"top", d.top},
                                   {"bottom", d.is_pair() ? json(d.bottom) : json(nullptr)},
                                   {"in_lambda0", d.in_lambda0}});
                return out;
            };
            json poset = json::array();
            for (const auto& l : multiplication_poset(line))
                poset.push_back({{"edge", l.edge}, {"superscript", l.superscript}, {"in_lambda0", l.in_lambda0}});
            json proj = json::array();
            for (int k = 1; k <= line_n; ++k) {
                auto p = projective_structure(line, k);
                proj.push_back({{"edge", k}, {"lower_arm", p.lower_arm}, {"upper_arm", p.upper_arm}});
            }
            doc = {{"command", "brauer-line"},
                   {"edges", line_n},
                   {"exceptional", line_v},
                   {"multiplicity", line_m},
                   {"type_I", chain_json(one)},
                   {"type_II", chain_json(two)},
                   {"poset", poset},
                   {"projectives", proj}};
        } else if (c_render->parsed()) {
            auto a = need_jobs(1)[0].pair();
            std::string text = window ? render(a, window->first, window->second) : render(a);
            json rows = json::array();
            std::istringstream is(text);
            for (std::string line; std::getline(is, line);)
                rows.push_back(line);
            doc = {{"command", "render"}, {"rows", rows}};
            if (fmt == Format::Ascii) {
                out << text << '\n';
                return Ok;
            }
        }
        emit(doc, fmt, out, abaci);
        return code;
    } catch (const ParseError& e) {
        write_error(err, "parse_error", e.what());
        return ParseFailure;
    } catch (const Error& e) {
        write_error(err, e.code_name(), e.what());
        return e.code() == ErrorCode::Budget ? BudgetExhausted : ParseFailure;
    } catch (const std::exception& e) {
        write_error(err, "internal", e.what());
        return ParseFailure;
    }
}

}  // namespace akb::cli
