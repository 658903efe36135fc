// cfstammer: generate structured partial-quotient sequences, detect
// stammering repetitions, and emit finite-evidence certificates and
// subword-complexity analytics as JSON/CSV.

#include "cfst/cf.hpp"
#include "cfst/criteria.hpp"
#include "cfst/json_io.hpp"
#include "cfst/repetition.hpp"
#include "cfst/subshift.hpp"
#include "cfst/words.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace cfst;
using cfst::io::json;

int log_level() {
    static const int level = [] {
        const char* e = std::getenv("CFSTAMMER_LOG");
        if (!e) return 0;
        if (std::strcmp(e, "debug") == 0) return 2;
        if (std::strcmp(e, "info") == 0) return 1;
        return 0;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[cfstammer] " << msg << "\n";
}

struct WordOptions {
    std::string morphism;
    std::string code;
    std::string dfao_path;
    std::string periodic;
    std::string sturmian;
    std::string prefix_file;
    int start = 0;
};

void add_word_options(CLI::App* cmd, WordOptions& o) {
    cmd->add_option("--morphism", o.morphism, "morphism rules, e.g. \"0->01;1->0\"");
    cmd->add_option("--start", o.start, "start letter of the morphic fixed point (default 0)");
    cmd->add_option("--code", o.code, "letter coding applied to the word, e.g. \"0=>1;1=>2\"");
    cmd->add_option("--dfao", o.dfao_path, "path to a DFAO spec (JSON)");
    cmd->add_option("--periodic", o.periodic, "cycle \"1,2\" or preperiod|cycle \"3|1,2\"");
    cmd->add_option("--sturmian", o.sturmian, "standard-word directives \"1,1,2\" (cycled)");
    cmd->add_option("--prefix-file", o.prefix_file, "file holding the letters of a finite prefix");
}

std::vector<Letter> parse_letter_list(const std::string& text) {
    std::vector<Letter> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(static_cast<Letter>(std::stol(tok)));
    }
    if (out.empty()) throw std::invalid_argument("empty letter list: \"" + text + "\"");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (Letter v : parse_letter_list(text)) out.push_back(v);
    return out;
}

InfiniteWord build_word(const WordOptions& o) {
    const int sources = int(!o.morphism.empty()) + int(!o.dfao_path.empty()) +
                        int(!o.periodic.empty()) + int(!o.sturmian.empty()) +
                        int(!o.prefix_file.empty());
    if (sources != 1)
        throw std::invalid_argument(
            "need exactly one generator among --morphism, --dfao, --periodic, --sturmian, "
            "--prefix-file");

    std::optional<InfiniteWord> word;
    if (!o.morphism.empty()) {
        const Morphism sigma = parse_morphism(o.morphism);
        word = fixed_point(sigma, static_cast<Letter>(o.start));
    } else if (!o.dfao_path.empty()) {
        std::ifstream in(o.dfao_path);
        if (!in) throw std::invalid_argument("cannot open DFAO file: " + o.dfao_path);
        json j = json::parse(in);
        word = automatic_word(io::dfao_from_json(j));
    } else if (!o.periodic.empty()) {
        const auto bar = o.periodic.find('|');
        if (bar == std::string::npos) {
            word = periodic_word(parse_letter_list(o.periodic));
        } else {
            word = eventually_periodic_word(parse_letter_list(o.periodic.substr(0, bar)),
                                            parse_letter_list(o.periodic.substr(bar + 1)));
        }
    } else if (!o.sturmian.empty()) {
        word = sturmian_standard(parse_int_list(o.sturmian));
    } else {
        std::ifstream in(o.prefix_file);
        if (!in) throw std::invalid_argument("cannot open prefix file: " + o.prefix_file);
        std::vector<Letter> letters;
        std::string tok;
        while (in >> tok) {
            for (char& c : tok)
                if (c == ',') c = ' ';
            std::istringstream ts(tok);
            long v;
            while (ts >> v) letters.push_back(static_cast<Letter>(v));
        }
        word = explicit_prefix_word(std::move(letters));
    }

    if (!o.code.empty()) word = coded_word(*word, parse_coding(o.code));
    return *word;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    log_info("wrote " + out_path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::evidence_transcendental: return 0;
        case Verdict::evidence_quadratic_or_rational: return 2;
        case Verdict::inconclusive: return 3;
    }
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stammering continued fractions: generators, repetition detectors, "
                 "finite-evidence certificates, subshift analytics"};
    app.require_subcommand(1);

    std::string out_path;
    const auto add_out = [&out_path](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    };

    // --- gen -----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "dump the first N letters of a generator");
    add_out(gen);
    WordOptions gen_word;
    add_word_options(gen, gen_word);
    std::size_t gen_n = 10000;
    bool gen_json = false, gen_cf = false;
    gen->add_option("-n,--len", gen_n, "number of letters (default 10000)");
    gen->add_flag("--json", gen_json, "emit a JSON array instead of space-separated letters");
    gen->add_flag("--cf", gen_cf, "require letters to be valid partial quotients (>= 1)");

    // --- detect ----------------------------------------------------------------
    auto* detect = app.add_subcommand("detect", "scan for stammering repetition witnesses");
    detect->require_subcommand(1);
    WordOptions det_word;
    std::string det_w = "2", det_wprime = "0";
    std::size_t det_n = 10000, det_min = 3;

    auto* det_star = detect->add_subcommand("star", "prefix powers V^x with x >= w");
    add_out(det_star);
    add_word_options(det_star, det_word);
    det_star->add_option("--w", det_w, "repetition exponent w > 1 (exact rational)");
    det_star->add_option("-n,--len", det_n, "scan bound N (default 10000)");
    det_star->add_option("--min-witnesses", det_min, "witnesses needed for evidence (default 3)");

    auto* det_ss = detect->add_subcommand("starstar", "shifted powers U V^x with |U|/|V| <= w'");
    add_out(det_ss);
    add_word_options(det_ss, det_word);
    det_ss->add_option("--w", det_w, "repetition exponent w > 1 (exact rational)");
    det_ss->add_option("--wprime", det_wprime, "offset ratio bound w' >= 0 (exact rational)");
    det_ss->add_option("-n,--len", det_n, "scan bound N (default 10000)");
    det_ss->add_option("--min-witnesses", det_min, "witnesses needed for evidence (default 3)");

    // --- certify ----------------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "emit a finite-evidence certificate");
    certify->require_subcommand(1);
    WordOptions cert_word;
    std::string cert_w = "2", cert_wprime = "0", cert_mode = "w2";
    std::size_t cert_n = 10000, cert_min = 3;
    double cert_margin = 0.05;

    auto* cert_t1 = certify->add_subcommand("t1", "purely stammering criterion");
    add_out(cert_t1);
    add_word_options(cert_t1, cert_word);
    cert_t1->add_option("--mode", cert_mode, "w2 (w >= 2 clause) or w1 (w > 1 + bounded growth)");
    cert_t1->add_option("-n,--len", cert_n, "scan bound N (default 10000)");
    cert_t1->add_option("--min-witnesses", cert_min, "witnesses needed (default 3)");

    auto* cert_t2 = certify->add_subcommand("t2", "shifted stammering criterion with growth gate");
    add_out(cert_t2);
    add_word_options(cert_t2, cert_word);
    cert_t2->add_option("--w", cert_w, "repetition exponent w > 1 (exact rational)");
    cert_t2->add_option("--wprime", cert_wprime, "offset ratio bound w' >= 0 (exact rational)");
    cert_t2->add_option("-n,--len", cert_n, "scan bound N (default 10000)");
    cert_t2->add_option("--min-witnesses", cert_min, "witnesses needed (default 3)");
    cert_t2->add_option("--margin", cert_margin, "required margin on the growth inequality");

    // --- subshift ----------------------------------------------------------------
    auto* subshift = app.add_subcommand("subshift", "complexity and recurrence analytics");
    subshift->require_subcommand(1);
    WordOptions sub_word;
    std::size_t sub_n = 10000, sub_nmax = 64;
    bool sub_csv = false;
    std::size_t sub_t3_nmax = 8;
    std::string sub_k = "auto";
    std::string sub_morphism, sub_code;
    int sub_start = 0;

    auto* sub_cx = subshift->add_subcommand("complexity", "distinct-factor counts p(n)");
    add_out(sub_cx);
    add_word_options(sub_cx, sub_word);
    sub_cx->add_option("-n,--len", sub_n, "prefix length N (default 10000)");
    sub_cx->add_option("--nmax", sub_nmax, "largest factor length (default 64)");
    sub_cx->add_flag("--csv", sub_csv, "emit CSV instead of JSON");

    auto* sub_gap = subshift->add_subcommand("gap", "p(n) - n trend probe");
    add_out(sub_gap);
    add_word_options(sub_gap, sub_word);
    sub_gap->add_option("-n,--len", sub_n, "prefix length N (default 10000)");
    sub_gap->add_option("--nmax", sub_nmax, "largest factor length (default 64)");

    auto* sub_recur = subshift->add_subcommand("recur", "worst return gaps and c estimate");
    add_out(sub_recur);
    add_word_options(sub_recur, sub_word);
    sub_recur->add_option("-n,--len", sub_n, "prefix length N (default 10000)");
    sub_recur->add_option("--nmax", sub_nmax, "largest factor length (default 64)");
    sub_recur->add_option("-k,--k", sub_k,
                          "accepted for script symmetry; the suggested k is always reported");
    sub_recur->add_flag("--csv", sub_csv, "emit CSV instead of JSON");

    auto* sub_t3 = subshift->add_subcommand("thm3", "recurrent-morphism witness pipeline");
    add_out(sub_t3);
    sub_t3->add_option("--morphism", sub_morphism, "morphism rules, e.g. \"0->01;1->0\"")
        ->required();
    sub_t3->add_option("--start", sub_start, "start letter (default 0)");
    sub_t3->add_option("--code", sub_code, "coding into CF digits, e.g. \"0=>1;1=>2\"");
    sub_t3->add_option("--nmax", sub_t3_nmax, "iterate depth (default 8)");

    auto* sub_t5 = subshift->add_subcommand("thm5", "linear-recurrence prefix-power witnesses");
    add_out(sub_t5);
    add_word_options(sub_t5, sub_word);
    sub_t5->add_option("-n,--len", sub_n, "prefix length N (default 10000)");
    sub_t5->add_option("--nmax", sub_nmax, "largest prefix length to witness (default 64)");
    sub_t5->add_option("-k,--k", sub_k, "recurrence constant k, or \"auto\" (ceil of measured c)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            InfiniteWord w = build_word(gen_word);
            const FiniteWord p = w.prefix(gen_n);
            if (gen_cf)
                for (Letter a : p)
                    if (a < 1) throw std::domain_error("--cf: letter < 1 in the generated word");
            if (gen_json) {
                json arr = json::array();
                for (Letter a : p) arr.push_back(a);
                emit(arr.dump() + "\n", out_path);
            } else {
                std::ostringstream line;
                for (std::size_t i = 0; i < p.size(); ++i) line << (i ? " " : "") << p[i];
                line << "\n";
                emit(line.str(), out_path);
            }
            return 0;
        }

        if (*detect) {
            if (det_n < 2) throw std::invalid_argument("scan bound too small (need N >= 2)");
            InfiniteWord word = build_word(det_word);
            const BigRat w = parse_rational(det_w);
            json report;
            if (*det_star) {
                log_info("detect star, N=" + std::to_string(det_n));
                StarDetection d = detect_star(word, w, det_n, det_min);
                json wits = json::array();
                for (const auto& wit : d.witnesses) wits.push_back(io::to_json(wit));
                report = json{{"condition", "star"},
                              {"w", rat_to_string(w)},
                              {"N", det_n},
                              {"min_witnesses", det_min},
                              {"witnesses", wits},
                              {"periodicity",
                               d.periodicity ? io::to_json(*d.periodicity) : json(nullptr)},
                              {"verdict", d.periodicity ? "periodic"
                                                        : (d.evidenced ? "evidence" : "insufficient")}};
            } else {
                const BigRat wprime = parse_rational(det_wprime);
                log_info("detect starstar, N=" + std::to_string(det_n));
                auto wits_raw = detect_star_star(word, w, wprime, det_n);
                auto periodicity = detect_eventual_period(word, det_n);
                json wits = json::array();
                for (const auto& wit : wits_raw) wits.push_back(io::to_json(wit));
                const bool evidenced = wits_raw.size() >= det_min && !periodicity;
                report = json{{"condition", "starstar"},
                              {"w", rat_to_string(w)},
                              {"wprime", rat_to_string(wprime)},
                              {"N", det_n},
                              {"min_witnesses", det_min},
                              {"witnesses", wits},
                              {"periodicity",
                               periodicity ? io::to_json(*periodicity) : json(nullptr)},
                              {"verdict", periodicity ? "periodic"
                                                      : (evidenced ? "evidence" : "insufficient")}};
            }
            emit(dump(report), out_path);
            return 0;
        }

        if (*certify) {
            InfiniteWord word = build_word(cert_word);
            CriterionReport report;
            if (*cert_t1) {
                Theorem1Mode mode;
                if (cert_mode == "w2") mode = Theorem1Mode::w_at_least_2;
                else if (cert_mode == "w1") mode = Theorem1Mode::w_above_1;
                else throw std::invalid_argument("--mode must be w2 or w1");
                report = certify_theorem1(word, cert_n, mode, cert_min);
            } else {
                report = certify_theorem2(word, cert_n, parse_rational(cert_w),
                                          parse_rational(cert_wprime), cert_min, cert_margin);
            }
            emit(dump(io::to_json(report)), out_path);
            return verdict_exit_code(report.verdict);
        }

        if (*subshift) {
            if (*sub_t3) {
                const Morphism sigma = parse_morphism(sub_morphism);
                const Letter start = static_cast<Letter>(sub_start);
                const Coding phi = sub_code.empty() ? Coding::identity(sigma.alphabet())
                                                    : parse_coding(sub_code);
                const Lemma2Constant lc = lemma2_constant(sigma, start);
                auto wits = theorem3_witnesses(sigma, phi, start, sub_t3_nmax);
                json arr = json::array();
                for (const auto& wit : wits) arr.push_back(io::to_json(wit));
                emit(dump(json{{"c", rat_to_string(lc.c)},
                               {"s", lc.s},
                               {"n0", lc.n0},
                               {"witnesses", arr}}),
                     out_path);
                return 0;
            }

            InfiniteWord word = build_word(sub_word);
            if (*sub_cx) {
                const ComplexityProfile profile = complexity(word, sub_nmax, sub_n);
                if (sub_csv) {
                    emit(io::subshift_csv(&profile, nullptr), out_path);
                    return 0;
                }
                const auto gate = morse_hedlund_gate(profile);
                std::optional<PeriodicityEvidence> periodicity;
                json agrees(nullptr);
                if (gate) {
                    periodicity = detect_eventual_period(word, sub_n);
                    agrees = periodicity.has_value();
                }
                emit(dump(json{{"profile", io::to_json(profile)},
                               {"morse_hedlund_gate", gate ? json(*gate) : json(nullptr)},
                               {"periodicity",
                                periodicity ? io::to_json(*periodicity) : json(nullptr)},
                               {"gate_agrees_with_period_scan", agrees}}),
                     out_path);
                return 0;
            }
            if (*sub_gap) {
                const GapProbe probe = complexity_gap_probe(word, sub_nmax, sub_n);
                const char* trend = probe.trend == GapTrend::hits_gate      ? "hits_gate"
                                    : probe.trend == GapTrend::constant_tail ? "constant_tail"
                                    : probe.trend == GapTrend::increasing    ? "increasing"
                                                                             : "irregular";
                emit(dump(json{{"trend", trend},
                               {"constant_a",
                                probe.constant_a ? json(*probe.constant_a) : json(nullptr)},
                               {"p_minus_n", probe.p_minus_n}}),
                     out_path);
                return 0;
            }
            if (*sub_recur) {
                const RecurrenceStats stats = recurrence_stats(word, sub_nmax, sub_n);
                if (sub_csv) {
                    emit(io::subshift_csv(nullptr, &stats), out_path);
                    return 0;
                }
                json j = io::to_json(stats);
                j["k_suggested"] = rat_ceil(stats.c_hat).str();
                emit(dump(j), out_path);
                return 0;
            }
            if (*sub_t5) {
                std::size_t k;
                bool k_auto = (sub_k == "auto");
                if (k_auto) {
                    const std::size_t nmax_est = std::max<std::size_t>(1, std::min(sub_nmax, sub_n / 4));
                    const RecurrenceStats stats = recurrence_stats(word, nmax_est, sub_n);
                    if (stats.c_hat == 0)
                        throw std::runtime_error("no factor recurs in the prefix; supply --k");
                    k = rat_ceil(stats.c_hat).convert_to<std::size_t>();
                } else {
                    k = static_cast<std::size_t>(std::stoul(sub_k));
                }
                json arr = json::array();
                for (std::size_t n = 2; n <= sub_nmax && (k + 1) * n <= sub_n; n *= 2) {
                    try {
                        const RepetitionWitness wit = theorem5_witness(word, k, n);
                        arr.push_back(json{{"n", n}, {"witness", io::to_json(wit)}});
                    } catch (const std::runtime_error& e) {
                        arr.push_back(json{{"n", n}, {"error", e.what()}});
                    }
                }
                emit(dump(json{{"k", k}, {"k_auto", k_auto}, {"witnesses", arr}}), out_path);
                return 0;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
