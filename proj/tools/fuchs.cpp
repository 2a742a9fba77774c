#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuchs/decide.hpp"
#include "fuchs/json_io.hpp"

namespace {

struct Options {
    long precision = 256;
    std::string tolerance = "2^-128";
    bool log = false;
    std::string format = "text";
    long max_iterations = fuchs::default_iteration_cap;
};

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("--precision", opt.precision, "working precision in bits")
        ->capture_default_str();
    sub->add_option("--tolerance", opt.tolerance, "boundary tolerance, 2^-k or bare k")
        ->capture_default_str();
    sub->add_flag("--log", opt.log, "include the triple trail and move log");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--max-iterations", opt.max_iterations, "iteration cap for minimization")
        ->capture_default_str();
}

fuchs::FloatContext context_of(const Options& opt) {
    if (opt.precision < 4 || opt.precision > (1L << 20))
        throw fuchs::input_error("precision out of range [4, 2^20]");
    std::string t = opt.tolerance;
    if (t.rfind("2^-", 0) == 0) t = t.substr(3);
    long k = 0;
    try {
        std::size_t pos = 0;
        k = std::stol(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw fuchs::input_error("bad tolerance '" + opt.tolerance + "', expected 2^-k");
    }
    if (k < 1 || k > (1L << 20)) throw fuchs::input_error("tolerance exponent out of range");
    return {static_cast<mpfr_prec_t>(opt.precision), -k};
}

// matrix arguments are inline JSON or @file
std::string load_arg(const std::string& s) {
    if (!s.empty() && s[0] == '@') {
        std::ifstream f(s.substr(1));
        if (!f) throw fuchs::input_error("cannot read file '" + s.substr(1) + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        return buf.str();
    }
    return s;
}

fuchs::GroupElement load_element(const std::string& s) {
    return fuchs::element_from_json_text(load_arg(s));
}

long integer_index(const std::string& s, const char* which) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 1) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw fuchs::input_error(std::string("root index ") + which + " must be a positive integer");
    }
}

nlohmann::json sl2_json(const fuchs::Sl2& m) {
    return nlohmann::json::array({nlohmann::json::array({m.a.str(), m.b.str()}),
                                  nlohmann::json::array({m.c.str(), m.d.str()})});
}

std::string sl2_text(const fuchs::Sl2& m) {
    return "[[" + m.a.str() + ", " + m.b.str() + "], [" + m.c.str() + ", " + m.d.str() + "]]";
}

void print_trail_text(const std::vector<std::array<std::string, 3>>& trail,
                      const fuchs::MoveLog& log, std::ostream& os) {
    for (std::size_t i = 0; i < trail.size(); ++i)
        os << "(" << i + 1 << ") triple (" << trail[i][0] << "," << trail[i][1] << ","
           << trail[i][2] << ")\n";
    for (const auto& e : log)
        os << "move " << fuchs::move_name(e.move) << ": triple (" << e.triple[0] << ","
           << e.triple[1] << "," << e.triple[2] << "), words (" << e.first_word.str() << ", "
           << e.second_word.str() << ")\n";
}

int emit_decision(fuchs::Decision d, const Options& opt) {
    if (!opt.log) {
        d.trail.clear();
        d.log.clear();
    }
    if (opt.format == "json") {
        std::cout << fuchs::decision_to_json(d).dump() << "\n";
    } else {
        std::cout << "verdict: " << fuchs::verdict_name(d.verdict) << "\n"
                  << "reason: " << fuchs::reason_name(d.reason) << "\n"
                  << "mode: "
                  << (d.exact ? std::string("exact")
                              : "float, precision " + std::to_string(d.precision) + " bits")
                  << "\n";
        for (const auto& [k, v] : d.witness) std::cout << k << " = " << v << "\n";
        if (opt.log) print_trail_text(d.trail, d.log, std::cout);
    }
    return d.verdict == fuchs::Verdict::ambiguous ? 3 : 0;
}

std::vector<std::array<std::string, 3>> rendered(const std::vector<fuchs::TraceTriple>& ts) {
    std::vector<std::array<std::string, 3>> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(fuchs::render_triple(t));
    return out;
}

int emit_trace_min(const fuchs::TraceMinResult& r, const Options& opt) {
    if (opt.format == "json") {
        nlohmann::json j;
        j["case"] = fuchs::min_case_name(r.case_tag);
        j["tau"] = r.tau.str();
        j["final_triple"] = fuchs::render_triple(r.final_triple);
        j["iterations"] = r.iterations;
        j["pair"] = nlohmann::json::array(
            {sl2_json(r.final_pair.first()), sl2_json(r.final_pair.second())});
        j["words"] = {r.final_pair.first_word().str(), r.final_pair.second_word().str()};
        if (opt.log) {
            j["triples"] = rendered(r.triples);
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& e : r.log) rows.push_back(fuchs::log_entry_to_json(e));
            j["log"] = rows;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "case: " << fuchs::min_case_name(r.case_tag) << "\n"
                  << "tau = " << r.tau.str() << "\n"
                  << "final triple: " << r.final_triple.str() << "\n"
                  << "U = " << sl2_text(r.final_pair.first()) << "\n"
                  << "V = " << sl2_text(r.final_pair.second()) << "\n"
                  << "words: " << r.final_pair.first_word().str() << ", "
                  << r.final_pair.second_word().str() << "\n"
                  << "iterations: " << r.iterations << "\n";
        if (opt.log) print_trail_text(rendered(r.triples), r.log, std::cout);
    }
    return 0;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const fuchs::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const fuchs::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

// one batch request, same field names as the subcommand flags
std::string run_request_line(const std::string& line, const Options& opt) {
    try {
        nlohmann::json req = nlohmann::json::parse(line, nullptr, false);
        if (req.is_discarded()) throw fuchs::input_error("request line is not valid JSON");
        if (!req.is_object() || !req.contains("command") || !req["command"].is_string())
            throw fuchs::input_error("request must be an object with a \"command\" field");
        std::string cmd = req["command"].get<std::string>();

        auto field = [&](const char* key) -> const nlohmann::json& {
            if (!req.contains(key))
                throw fuchs::input_error(std::string("missing field \"") + key + "\"");
            return req[key];
        };
        auto mat = [&](const char* key) { return fuchs::element_from_json(field(key)); };
        auto text = [&](const char* key) -> std::string {
            const nlohmann::json& v = field(key);
            if (v.is_string()) return v.get<std::string>();
            if (v.is_number_integer()) return std::to_string(v.get<long long>());
            throw fuchs::input_error(std::string("field \"") + key + "\" must be a string");
        };
        auto scal = [&](const char* key) { return fuchs::Scalar::parse(text(key)); };

        fuchs::Decision d;
        if (cmd == "classify") {
            d = fuchs::is_free_rank2(fuchs::GeneratorPair(mat("A"), mat("B")),
                                     opt.max_iterations);
        } else if (cmd == "trace-min") {
            fuchs::TraceMinResult r = fuchs::trace_minimize(
                fuchs::GeneratorPair(mat("A"), mat("B")), opt.max_iterations);
            nlohmann::json j;
            j["case"] = fuchs::min_case_name(r.case_tag);
            j["tau"] = r.tau.str();
            j["final_triple"] = fuchs::render_triple(r.final_triple);
            j["pair"] = nlohmann::json::array(
                {sl2_json(r.final_pair.first()), sl2_json(r.final_pair.second())});
            if (opt.log) j["triples"] = rendered(r.triples);
            return j.dump();
        } else if (cmd == "root-check") {
            if (req.contains("R") || req.contains("S")) {
                d = fuchs::root_check_positive_tau(fuchs::GeneratorPair(mat("R"), mat("S")),
                                                   opt.max_iterations);
            } else {
                d = fuchs::root_check_negative_tau(scal("trA"), scal("trB"), scal("tau"),
                                                   integer_index(text("m"), "m"),
                                                   integer_index(text("n"), "n"),
                                                   context_of(opt));
            }
        } else if (cmd == "rational-power") {
            d = fuchs::rational_power_decide(fuchs::GeneratorPair(mat("A"), mat("B")),
                                             fuchs::RootSpec::parse(text("m"), text("n")),
                                             context_of(opt), opt.max_iterations);
        } else if (cmd == "parabolic-check") {
            d = fuchs::parabolic_root_check(integer_index(text("m"), "m"),
                                            integer_index(text("n"), "n"));
        } else {
            throw fuchs::input_error("unknown command '" + cmd + "'");
        }
        if (!opt.log) {
            d.trail.clear();
            d.log.clear();
        }
        return fuchs::decision_to_json(d).dump();
    } catch (const fuchs::input_error& e) {
        return nlohmann::json{{"error", e.what()}, {"exit", 1}}.dump();
    } catch (const fuchs::precondition_error& e) {
        return nlohmann::json{{"error", e.what()}, {"exit", 2}}.dump();
    } catch (const std::exception& e) {
        return nlohmann::json{{"error", e.what()}, {"exit", 4}}.dump();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"free rank-2 Fuchsian pairs: classification and root checks"};
    app.require_subcommand(1);
    Options opt;

    std::string arg_a, arg_b, arg_r, arg_s, arg_tra, arg_trb, arg_tau;
    std::string arg_m = "1", arg_n = "1";

    CLI::App* classify = app.add_subcommand(
        "classify", "decide whether <A,B> is a free Fuchsian group of rank 2");
    classify->add_option("--A", arg_a, "matrix A as JSON [[a,b],[c,d]] or @file")->required();
    classify->add_option("--B", arg_b, "matrix B")->required();
    add_common(classify, opt);

    CLI::App* tmin = app.add_subcommand("trace-min", "run trace minimization on a pair");
    tmin->add_option("--A", arg_a, "matrix A")->required();
    tmin->add_option("--B", arg_b, "matrix B")->required();
    add_common(tmin, opt);

    CLI::App* rcheck = app.add_subcommand(
        "root-check",
        "root criteria: matrices --R/--S when tr[R,S] > 2, or traces "
        "--trA/--trB/--tau/--m/--n when tau <= -2");
    rcheck->add_option("--R", arg_r, "root matrix R");
    rcheck->add_option("--S", arg_s, "root matrix S");
    rcheck->add_option("--trA", arg_tra, "|trace| of A, exact scalar");
    rcheck->add_option("--trB", arg_trb, "|trace| of B, exact scalar");
    rcheck->add_option("--tau", arg_tau, "commutator trace of (A,B), exact scalar");
    rcheck->add_option("--m", arg_m, "root index for A");
    rcheck->add_option("--n", arg_n, "root index for B");
    add_common(rcheck, opt);

    CLI::App* rpower = app.add_subcommand(
        "rational-power", "decide freeness for p/q-th and p'/q'-th roots of a free pair");
    rpower->add_option("--A", arg_a, "matrix A")->required();
    rpower->add_option("--B", arg_b, "matrix B")->required();
    rpower->add_option("--m", arg_m, "exponent for A, p or p/q")->required();
    rpower->add_option("--n", arg_n, "exponent for B, p or p/q")->required();
    add_common(rpower, opt);

    CLI::App* para = app.add_subcommand("parabolic-check",
                                        "root rule for a pair of parabolic generators");
    para->add_option("--m", arg_m, "root index for A")->required();
    para->add_option("--n", arg_n, "root index for B")->required();
    add_common(para, opt);

    CLI::App* batch = app.add_subcommand(
        "batch", "read newline-delimited JSON requests on stdin, one JSON reply per line");
    add_common(batch, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the error message
        return code == 0 ? 0 : 1;
    }

    if (classify->parsed())
        return guarded([&] {
            return emit_decision(fuchs::is_free_rank2(fuchs::GeneratorPair(load_element(arg_a),
                                                                           load_element(arg_b)),
                                                      opt.max_iterations),
                                 opt);
        });

    if (tmin->parsed())
        return guarded([&] {
            return emit_trace_min(fuchs::trace_minimize(fuchs::GeneratorPair(
                                                            load_element(arg_a),
                                                            load_element(arg_b)),
                                                        opt.max_iterations),
                                  opt);
        });

    if (rcheck->parsed())
        return guarded([&] {
            bool matrix_mode = !arg_r.empty() || !arg_s.empty();
            bool trace_mode = !arg_tra.empty() || !arg_trb.empty() || !arg_tau.empty();
            if (matrix_mode == trace_mode)
                throw fuchs::input_error(
                    "root-check needs either --R/--S or --trA/--trB/--tau/--m/--n");
            fuchs::Decision d;
            if (matrix_mode) {
                if (arg_r.empty() || arg_s.empty())
                    throw fuchs::input_error("matrix mode needs both --R and --S");
                d = fuchs::root_check_positive_tau(fuchs::GeneratorPair(load_element(arg_r),
                                                                        load_element(arg_s)),
                                                   opt.max_iterations);
            } else {
                if (arg_tra.empty() || arg_trb.empty() || arg_tau.empty())
                    throw fuchs::input_error("trace mode needs --trA, --trB and --tau");
                d = fuchs::root_check_negative_tau(
                    fuchs::Scalar::parse(arg_tra), fuchs::Scalar::parse(arg_trb),
                    fuchs::Scalar::parse(arg_tau), integer_index(arg_m, "m"),
                    integer_index(arg_n, "n"), context_of(opt));
            }
            return emit_decision(std::move(d), opt);
        });

    if (rpower->parsed())
        return guarded([&] {
            return emit_decision(
                fuchs::rational_power_decide(fuchs::GeneratorPair(load_element(arg_a),
                                                                  load_element(arg_b)),
                                             fuchs::RootSpec::parse(arg_m, arg_n),
                                             context_of(opt), opt.max_iterations),
                opt);
        });

    if (para->parsed())
        return guarded([&] {
            return emit_decision(fuchs::parabolic_root_check(integer_index(arg_m, "m"),
                                                             integer_index(arg_n, "n")),
                                 opt);
        });

    if (batch->parsed())
        return guarded([&] {
            context_of(opt);  // validate the shared numeric options up front
            std::vector<std::future<std::string>> replies;
            std::string line;
            while (std::getline(std::cin, line)) {
                if (line.empty()) continue;
                replies.push_back(std::async(std::launch::async, run_request_line, line, opt));
            }
            for (auto& f : replies) std::cout << f.get() << "\n";
            return 0;
        });

    return 0;
}
