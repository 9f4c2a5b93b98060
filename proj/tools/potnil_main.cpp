// Command-line front end. Talks to the library only through potnil.h.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "potnil/potnil.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitCriterion = 2;
constexpr int kExitBlockCriterion = 3;
constexpr int kExitUsage = 64;
constexpr int kExitBudget = 65;

// Thrown when a C call fails; carries the status for exit-code mapping.
struct ApiFailure {
    potnil_status status;
    std::string message;
};

struct UsageFailure {
    std::string message;
};

void ok(potnil_status s) {
    if (s != POTNIL_OK) throw ApiFailure{s, potnil_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};

using FieldHandle = std::unique_ptr<potnil_field, Deleter<potnil_field, potnil_field_free>>;
using MatrixHandle = std::unique_ptr<potnil_matrix, Deleter<potnil_matrix, potnil_matrix_free>>;
using DecompHandle = std::unique_ptr<potnil_decomposition, Deleter<potnil_decomposition, potnil_decomposition_free>>;

std::string take(char* s) {
    std::string out(s);
    potnil_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageFailure{"cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageFailure{"cannot write '" + path.string() + "'"};
    out << text;
}

MatrixHandle load_matrix(const std::string& path) {
    potnil_matrix* m = nullptr;
    ok(potnil_matrix_parse(read_file(path).c_str(), &m));
    return MatrixHandle(m);
}

std::vector<MatrixHandle> load_matrices(const std::string& path) {
    potnil_matrix** arr = nullptr;
    size_t count = 0;
    ok(potnil_matrix_parse_all(read_file(path).c_str(), &arr, &count));
    std::vector<MatrixHandle> out;
    for (size_t i = 0; i < count; ++i) out.emplace_back(arr[i]);
    // ownership of the elements moved into the handles; release the array only
    potnil_matrix_array_free(arr, 0);
    return out;
}

std::string text_of(const potnil_matrix* m) {
    char* s = nullptr;
    ok(potnil_matrix_to_text(m, &s));
    return take(s);
}

FieldHandle make_field(uint64_t p, unsigned d, const std::vector<uint64_t>& modulus) {
    potnil_field* f = nullptr;
    if (!modulus.empty() && modulus.size() != d + 1) throw UsageFailure{"--mod needs d+1 coefficients"};
    ok(potnil_field_create(p, d, modulus.empty() ? nullptr : modulus.data(), &f));
    return FieldHandle(f);
}

void print_section(std::ostream& os, const std::string& title, const potnil_matrix* m) {
    os << "# " << title << "\n" << text_of(m);
}

struct Parts {
    std::vector<MatrixHandle> potents;
    MatrixHandle nilpotent;
};

Parts parts_of(const potnil_decomposition* d) {
    Parts parts;
    for (size_t i = 0; i < potnil_decomposition_potent_count(d); ++i) {
        potnil_matrix* e = nullptr;
        ok(potnil_decomposition_potent(d, i, &e));
        parts.potents.emplace_back(e);
    }
    potnil_matrix* n = nullptr;
    ok(potnil_decomposition_nilpotent(d, &n));
    parts.nilpotent.reset(n);
    return parts;
}

// Prints E_1..E_m and N as documents, then the certificate as key: value lines.
void print_decomposition(std::ostream& os, const potnil_decomposition* d) {
    const Parts parts = parts_of(d);
    for (size_t i = 0; i < parts.potents.size(); ++i) {
        print_section(os, "E_" + std::to_string(i + 1), parts.potents[i].get());
    }
    print_section(os, "N", parts.nilpotent.get());
    char* cert = nullptr;
    ok(potnil_decomposition_certificate_text(d, &cert));
    os << "# certificate\n" << take(cert);
}

// Writes E.txt (all potents, concatenated), N.txt and C.txt for `check`.
void emit_decomposition(const std::string& dir, const potnil_decomposition* d, const potnil_matrix* target) {
    std::filesystem::create_directories(dir);
    const Parts parts = parts_of(d);
    std::string es;
    for (const auto& e : parts.potents) es += text_of(e.get());
    write_file(std::filesystem::path(dir) / "E.txt", es);
    write_file(std::filesystem::path(dir) / "N.txt", text_of(parts.nilpotent.get()));
    write_file(std::filesystem::path(dir) / "C.txt", text_of(target));
}

std::vector<uint64_t> parse_uint_list(const std::string& csv) {
    std::vector<uint64_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageFailure{"expected a comma-separated list of integers, got '" + csv + "'"};
        }
    }
    return out;
}

int exit_code_for(potnil_status s) {
    switch (s) {
        case POTNIL_ERR_CRITERION_FAILED: return kExitCriterion;
        case POTNIL_ERR_BLOCK_CRITERION_FAILED: return kExitBlockCriterion;
        case POTNIL_ERR_BUDGET_EXCEEDED: return kExitBudget;
        case POTNIL_ERR_PARSE:
        case POTNIL_ERR_INVALID_ARGUMENT:
        case POTNIL_ERR_NOT_MONIC:
        case POTNIL_ERR_PREFIX_TOO_LONG:
        case POTNIL_ERR_BAD_PREFIX_LENGTH:
        case POTNIL_ERR_DIMENSION_MISMATCH: return kExitUsage;
        default: return kExitFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decompose matrices over GF(p^d) into p-potent plus nilpotent parts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(potnil_version()));

    // decompose
    auto* decompose = app.add_subcommand("decompose", "Decompose a matrix into m p-potents plus a nilpotent");
    std::string dec_file;
    std::size_t dec_m = 1;
    std::string dec_companion;
    uint64_t dec_p = 0;
    unsigned dec_d = 1;
    std::string dec_mod;
    std::string dec_emit;
    decompose->add_option("FILE", dec_file, "Matrix document ('-' for stdin)");
    decompose->add_option("--m", dec_m, "Number of p-potent summands")->check(CLI::PositiveNumber);
    auto* dec_comp_opt =
        decompose->add_option("--companion", dec_companion, "Companion coefficients c0,c1,...,c_{n-1}");
    decompose->add_option("--p", dec_p, "Characteristic (with --companion)");
    decompose->add_option("--d", dec_d, "Extension degree (with --companion)")->check(CLI::PositiveNumber);
    decompose->add_option("--mod", dec_mod, "Modulus coefficients, lowest degree first");
    decompose->add_option("--emit", dec_emit, "Directory receiving E.txt, N.txt, C.txt for `check`");
    dec_comp_opt->excludes(decompose->get_option("FILE"));

    // check
    auto* check = app.add_subcommand("check", "Re-verify a decomposition");
    std::string chk_e, chk_n, chk_c;
    check->add_option("FILE_E", chk_e, "p-potent parts (one or more documents)")->required();
    check->add_option("FILE_N", chk_n, "Nilpotent part")->required();
    check->add_option("FILE_C", chk_c, "Target matrix")->required();

    // similar
    auto* similar = app.add_subcommand("similar", "Similarity of a companion to companion + diag(prefix)");
    std::string sim_file, sim_prefix;
    similar->add_option("FILE", sim_file, "Companion matrix document")->required();
    similar->add_option("--prefix", sim_prefix, "Diagonal prefix a1,...,ak")->required();

    // rcf
    auto* rcf = app.add_subcommand("rcf", "Frobenius normal form with similarity witness");
    std::string rcf_file;
    bool rcf_decompose = false;
    std::size_t rcf_m = 1;
    rcf->add_option("FILE", rcf_file, "Matrix document")->required();
    rcf->add_flag("--decompose", rcf_decompose, "Also decompose the matrix block by block");
    rcf->add_option("--m", rcf_m, "Number of p-potent summands with --decompose")->check(CLI::PositiveNumber);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Check every companion matrix of size n");
    uint64_t en_p = 0, en_budget = 0;
    unsigned en_d = 1, en_jobs = 1;
    std::size_t en_n = 0;
    std::string en_csv, en_mod;
    bool en_no_oracle = false;
    enumerate->add_option("--p", en_p, "Characteristic")->required();
    enumerate->add_option("--d", en_d, "Extension degree")->check(CLI::PositiveNumber);
    enumerate->add_option("--mod", en_mod, "Modulus coefficients, lowest degree first");
    enumerate->add_option("--n", en_n, "Matrix size")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--jobs", en_jobs, "Worker threads")->check(CLI::PositiveNumber);
    enumerate->add_option("--csv", en_csv, "Write the per-instance report to PATH");
    enumerate->add_option("--budget", en_budget, "Oracle search budget (matrices)");
    enumerate->add_flag("--no-oracle", en_no_oracle, "Skip the brute-force oracle");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force search for a p-potent plus nilpotent split");
    std::string or_file;
    uint64_t or_budget = 0;
    unsigned or_jobs = 1;
    oracle->add_option("FILE", or_file, "Matrix document")->required();
    oracle->add_option("--budget", or_budget, "Maximum number of candidate matrices");
    oracle->add_option("--jobs", or_jobs, "Worker threads")->check(CLI::PositiveNumber);

    // prescribed
    auto* prescribed = app.add_subcommand("prescribed", "Prescribed characteristic polynomial sweep");
    uint64_t pr_p = 0, pr_budget = 0, pr_seed = 1;
    std::size_t pr_n = 0;
    double pr_sample = 1.0;
    unsigned pr_jobs = 1;
    prescribed->add_option("--p", pr_p, "Prime")->required();
    prescribed->add_option("--n", pr_n, "Matrix size")->required();
    prescribed->add_option("--sample", pr_sample, "Fraction of instances to search")->check(CLI::Range(0.0, 1.0));
    prescribed->add_option("--seed", pr_seed, "Sampling seed");
    prescribed->add_option("--jobs", pr_jobs, "Worker threads")->check(CLI::PositiveNumber);
    prescribed->add_option("--budget", pr_budget, "Search budget per instance (matrices)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (decompose->parsed()) {
            MatrixHandle target;
            if (!dec_companion.empty()) {
                if (dec_p == 0) throw UsageFailure{"--companion needs --p"};
                const FieldHandle f = make_field(dec_p, dec_d, parse_uint_list(dec_mod));
                potnil_matrix* c = nullptr;
                ok(potnil_matrix_companion(f.get(), dec_companion.c_str(), &c));
                target.reset(c);
            } else {
                if (dec_file.empty()) throw UsageFailure{"decompose needs FILE or --companion"};
                target = load_matrix(dec_file);
            }
            int is_companion = 0;
            ok(potnil_matrix_is_companion(target.get(), &is_companion));
            potnil_decomposition* raw = nullptr;
            if (is_companion) {
                ok(potnil_decompose_companion(target.get(), dec_m, &raw));
            } else {
                ok(potnil_decompose_matrix(target.get(), dec_m, &raw, nullptr));
            }
            const DecompHandle d(raw);
            print_decomposition(std::cout, d.get());
            if (!dec_emit.empty()) emit_decomposition(dec_emit, d.get(), target.get());
            return kExitOk;
        }

        if (check->parsed()) {
            const auto es = load_matrices(chk_e);
            const MatrixHandle n = load_matrix(chk_n);
            const MatrixHandle c = load_matrix(chk_c);
            std::vector<const potnil_matrix*> ptrs;
            for (const auto& e : es) ptrs.push_back(e.get());
            potnil_certificate cert{};
            ok(potnil_check(ptrs.data(), ptrs.size(), n.get(), c.get(), &cert));
            std::cout << "p_potent: " << cert.potents_passed << "/" << cert.potent_count << "\n"
                      << "nilpotent: " << (cert.nilpotent ? "true" : "false") << "\n"
                      << "nilpotency_index: " << cert.nilpotency_index << "\n"
                      << "sum: " << (cert.sum ? "true" : "false") << "\n"
                      << "verified: " << (cert.verified ? "true" : "false") << "\n";
            return cert.verified ? kExitOk : kExitFailure;
        }

        if (similar->parsed()) {
            const MatrixHandle c = load_matrix(sim_file);
            potnil_similarity* s = nullptr;
            ok(potnil_similar(c.get(), sim_prefix.c_str(), &s));
            std::unique_ptr<potnil_similarity, Deleter<potnil_similarity, potnil_similarity_free>> guard(s);
            potnil_matrix *d = nullptr, *p = nullptr, *pi = nullptr;
            ok(potnil_similarity_modified(s, &d));
            const MatrixHandle hd(d);
            ok(potnil_similarity_p(s, &p));
            const MatrixHandle hp(p);
            ok(potnil_similarity_p_inv(s, &pi));
            const MatrixHandle hpi(pi);
            print_section(std::cout, "D", hd.get());
            print_section(std::cout, "P", hp.get());
            print_section(std::cout, "P_inv", hpi.get());
            return kExitOk;
        }

        if (rcf->parsed()) {
            const MatrixHandle a = load_matrix(rcf_file);
            potnil_rcf* r = nullptr;
            ok(potnil_rcf_compute(a.get(), &r));
            std::unique_ptr<potnil_rcf, Deleter<potnil_rcf, potnil_rcf_free>> guard(r);
            std::cout << "invariant_factors: " << potnil_rcf_factor_count(r) << "\n";
            for (size_t i = 0; i < potnil_rcf_factor_count(r); ++i) {
                char* f = nullptr;
                ok(potnil_rcf_factor(r, i, &f));
                std::cout << "q_" << i + 1 << ": " << take(f) << "\n";
            }
            potnil_matrix *bd = nullptr, *p = nullptr, *pi = nullptr;
            ok(potnil_rcf_block_diagonal(r, &bd));
            const MatrixHandle hbd(bd);
            ok(potnil_rcf_witness(r, &p, &pi));
            const MatrixHandle hp(p), hpi(pi);
            print_section(std::cout, "F", hbd.get());
            print_section(std::cout, "P", hp.get());
            print_section(std::cout, "P_inv", hpi.get());
            if (rcf_decompose) {
                potnil_decomposition* raw = nullptr;
                size_t block = 0;
                const potnil_status s = potnil_decompose_matrix(a.get(), rcf_m, &raw, &block);
                if (s == POTNIL_ERR_BLOCK_CRITERION_FAILED) {
                    std::cout << "block_criterion_failed: " << block << "\n";
                }
                ok(s);
                const DecompHandle d(raw);
                print_decomposition(std::cout, d.get());
            }
            return kExitOk;
        }

        if (enumerate->parsed()) {
            const FieldHandle f = make_field(en_p, en_d, parse_uint_list(en_mod));
            potnil_enumerate_options opts{en_budget, en_jobs, en_no_oracle ? 0 : 1};
            potnil_enum_report* r = nullptr;
            ok(potnil_enumerate(f.get(), en_n, &opts, &r));
            std::unique_ptr<potnil_enum_report, Deleter<potnil_enum_report, potnil_enum_report_free>> guard(r);
            char* summary = nullptr;
            ok(potnil_enum_report_summary(r, &summary));
            std::cout << take(summary);
            if (!en_csv.empty()) {
                char* csv = nullptr;
                ok(potnil_enum_report_csv(r, &csv));
                write_file(en_csv, take(csv));
            }
            potnil_enum_counts counts{};
            potnil_enum_report_counts(r, &counts);
            return counts.mismatches == 0 ? kExitOk : kExitFailure;
        }

        if (oracle->parsed()) {
            const MatrixHandle a = load_matrix(or_file);
            potnil_decomposition* raw = nullptr;
            ok(potnil_brute_force(a.get(), or_budget, or_jobs, &raw));
            if (!raw) {
                std::cout << "result: none\n";
                return kExitFailure;
            }
            const DecompHandle d(raw);
            std::cout << "result: found\n";
            print_decomposition(std::cout, d.get());
            return kExitOk;
        }

        if (prescribed->parsed()) {
            potnil_prescribed_options opts{pr_budget, pr_jobs, pr_sample, pr_seed};
            potnil_prescribed_report* r = nullptr;
            ok(potnil_prescribed(pr_p, pr_n, &opts, &r));
            std::unique_ptr<potnil_prescribed_report, Deleter<potnil_prescribed_report, potnil_prescribed_report_free>>
                guard(r);
            char* summary = nullptr;
            ok(potnil_prescribed_report_summary(r, &summary));
            std::cout << take(summary);
            potnil_prescribed_counts counts{};
            potnil_prescribed_report_counts(r, &counts);
            return counts.failures == 0 ? kExitOk : kExitFailure;
        }
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const ApiFailure& e) {
        std::cerr << "error: " << potnil_status_name(e.status) << ": " << e.message << "\n";
        return exit_code_for(e.status);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
