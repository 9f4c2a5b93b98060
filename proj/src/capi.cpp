#include "potnil/potnil.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "potnil/decompose.hpp"
#include "potnil/error.hpp"
#include "potnil/oracle.hpp"
#include "potnil/rcf.hpp"
#include "potnil/text_format.hpp"

struct potnil_field {
    potnil::FieldPtr ptr;
};
struct potnil_matrix {
    potnil::Matrix m;
};
struct potnil_decomposition {
    potnil::Decomposition d;
};
struct potnil_similarity {
    potnil::Matrix modified;
    potnil::SimilarityWitness witness;
};
struct potnil_rcf {
    potnil::FrobeniusForm form;
};
struct potnil_enum_report {
    potnil::EnumerationReport report;
};
struct potnil_prescribed_report {
    potnil::PrescribedReport report;
};

namespace {

thread_local std::string g_last_error;

potnil_status status_of(potnil::ErrorCode code) {
    using potnil::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument: return POTNIL_ERR_INVALID_ARGUMENT;
        case ErrorCode::SpecMismatch: return POTNIL_ERR_SPEC_MISMATCH;
        case ErrorCode::ZeroInverse: return POTNIL_ERR_ZERO_INVERSE;
        case ErrorCode::DivisionByZeroPoly: return POTNIL_ERR_DIVISION_BY_ZERO_POLY;
        case ErrorCode::NotMonic: return POTNIL_ERR_NOT_MONIC;
        case ErrorCode::DimensionMismatch: return POTNIL_ERR_DIMENSION_MISMATCH;
        case ErrorCode::Singular: return POTNIL_ERR_SINGULAR;
        case ErrorCode::PrefixTooLong: return POTNIL_ERR_PREFIX_TOO_LONG;
        case ErrorCode::BadPrefixLength: return POTNIL_ERR_BAD_PREFIX_LENGTH;
        case ErrorCode::NonzeroTrace: return POTNIL_ERR_NONZERO_TRACE;
        case ErrorCode::CriterionFailed: return POTNIL_ERR_CRITERION_FAILED;
        case ErrorCode::BlockCriterionFailed: return POTNIL_ERR_BLOCK_CRITERION_FAILED;
        case ErrorCode::BudgetExceeded: return POTNIL_ERR_BUDGET_EXCEEDED;
        case ErrorCode::NotFound: return POTNIL_ERR_NOT_FOUND;
        case ErrorCode::ParseError: return POTNIL_ERR_PARSE;
        case ErrorCode::Internal: return POTNIL_ERR_INTERNAL;
    }
    return POTNIL_ERR_INTERNAL;
}

potnil_status fail(potnil_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs body() and translates exceptions into status codes.
template <class Body>
potnil_status guarded(Body&& body) {
    try {
        body();
        g_last_error.clear();
        return POTNIL_OK;
    } catch (const potnil::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(POTNIL_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(POTNIL_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) throw potnil::Error(potnil::ErrorCode::InvalidArgument, what);
}

potnil_matrix* wrap(potnil::Matrix m) { return new potnil_matrix{std::move(m)}; }

std::vector<potnil::Code> parse_csv(const potnil::FieldSpec& field, std::string_view csv) {
    std::vector<potnil::Code> out;
    if (csv.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = csv.find(',', start);
        const auto token = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
        out.push_back(field.parse(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

potnil::CompanionMatrix as_companion(const potnil_matrix* m) {
    auto c = potnil::CompanionMatrix::recognize(m->m);
    require(c.has_value(), "matrix is not of companion shape");
    return *c;
}

void fill_certificate(const potnil::Certificate& c, potnil_certificate* out) {
    out->potent_count = c.checked_p_potency.size();
    out->potents_passed = 0;
    for (bool b : c.checked_p_potency) out->potents_passed += b;
    out->nilpotent = c.checked_nilpotency;
    out->sum = c.checked_sum;
    out->nilpotency_index = c.nilpotency_witness;
    out->verified = c.all_passed();
}

}  // namespace

extern "C" {

const char* potnil_version(void) { return "0.1.0"; }

const char* potnil_last_error(void) { return g_last_error.c_str(); }

const char* potnil_status_name(potnil_status status) {
    switch (status) {
        case POTNIL_OK: return "Ok";
        case POTNIL_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case POTNIL_ERR_SPEC_MISMATCH: return "SpecMismatch";
        case POTNIL_ERR_ZERO_INVERSE: return "ZeroInverse";
        case POTNIL_ERR_DIVISION_BY_ZERO_POLY: return "DivisionByZeroPoly";
        case POTNIL_ERR_NOT_MONIC: return "NotMonic";
        case POTNIL_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
        case POTNIL_ERR_SINGULAR: return "Singular";
        case POTNIL_ERR_PREFIX_TOO_LONG: return "PrefixTooLong";
        case POTNIL_ERR_BAD_PREFIX_LENGTH: return "BadPrefixLength";
        case POTNIL_ERR_NONZERO_TRACE: return "NonzeroTrace";
        case POTNIL_ERR_CRITERION_FAILED: return "CriterionFailed";
        case POTNIL_ERR_BLOCK_CRITERION_FAILED: return "BlockCriterionFailed";
        case POTNIL_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
        case POTNIL_ERR_NOT_FOUND: return "NotFound";
        case POTNIL_ERR_PARSE: return "ParseError";
        case POTNIL_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

void potnil_string_free(char* s) { std::free(s); }

potnil_status potnil_field_create(uint64_t p, unsigned degree, const uint64_t* modulus, potnil_field** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        require(degree >= 1, "degree must be positive");
        potnil::FieldPtr f;
        if (modulus) {
            f = potnil::FieldSpec::with_modulus(p, std::vector<std::uint64_t>(modulus, modulus + degree + 1));
        } else if (degree == 1) {
            f = potnil::FieldSpec::prime(p);
        } else {
            f = potnil::FieldSpec::extension(p, degree);
        }
        *out = new potnil_field{std::move(f)};
    });
}

void potnil_field_free(potnil_field* field) { delete field; }

uint64_t potnil_field_characteristic(const potnil_field* field) { return field->ptr->characteristic(); }

unsigned potnil_field_degree(const potnil_field* field) { return field->ptr->degree(); }

uint64_t potnil_field_order(const potnil_field* field) { return field->ptr->order(); }

potnil_status potnil_field_header(const potnil_field* field, char** out) {
    return guarded([&] { *out = dup_string(potnil::serialize_field(*field->ptr)); });
}

potnil_status potnil_matrix_parse(const char* text, potnil_matrix** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = wrap(potnil::parse_matrix(text));
    });
}

potnil_status potnil_matrix_parse_all(const char* text, potnil_matrix*** out, size_t* count) {
    return guarded([&] {
        require(text && out && count, "null argument");
        auto all = potnil::parse_matrices(text);
        auto* arr = static_cast<potnil_matrix**>(std::calloc(all.size(), sizeof(potnil_matrix*)));
        if (!arr) throw std::bad_alloc();
        for (std::size_t i = 0; i < all.size(); ++i) arr[i] = wrap(std::move(all[i]));
        *out = arr;
        *count = all.size();
    });
}

void potnil_matrix_array_free(potnil_matrix** matrices, size_t count) {
    if (!matrices) return;
    for (std::size_t i = 0; i < count; ++i) delete matrices[i];
    std::free(matrices);
}

potnil_status potnil_matrix_companion(const potnil_field* field, const char* coeffs_csv, potnil_matrix** out) {
    return guarded([&] {
        require(field && coeffs_csv && out, "null argument");
        auto coeffs = parse_csv(*field->ptr, coeffs_csv);
        require(!coeffs.empty(), "companion needs at least one coefficient");
        *out = wrap(potnil::CompanionMatrix(field->ptr, std::move(coeffs)).realize());
    });
}

void potnil_matrix_free(potnil_matrix* m) { delete m; }

size_t potnil_matrix_rows(const potnil_matrix* m) { return m->m.rows(); }

size_t potnil_matrix_cols(const potnil_matrix* m) { return m->m.cols(); }

potnil_status potnil_matrix_to_text(const potnil_matrix* m, char** out) {
    return guarded([&] { *out = dup_string(potnil::serialize(m->m)); });
}

potnil_status potnil_matrix_is_companion(const potnil_matrix* m, int* out) {
    return guarded([&] { *out = potnil::CompanionMatrix::recognize(m->m).has_value(); });
}

potnil_status potnil_matrix_trace(const potnil_matrix* m, char** out) {
    return guarded([&] { *out = dup_string(potnil::trace(m->m).to_string()); });
}

potnil_status potnil_matrix_is_p_potent(const potnil_matrix* m, int* out) {
    return guarded([&] { *out = potnil::is_p_potent(m->m); });
}

potnil_status potnil_matrix_is_nilpotent(const potnil_matrix* m, int* out) {
    return guarded([&] { *out = potnil::is_nilpotent(m->m); });
}

potnil_status potnil_matrix_charpoly(const potnil_matrix* m, char** out) {
    return guarded([&] { *out = dup_string(potnil::charpoly(m->m).to_string()); });
}

potnil_status potnil_matrix_minpoly(const potnil_matrix* m, char** out) {
    return guarded([&] { *out = dup_string(potnil::minpoly(m->m).to_string()); });
}

potnil_status potnil_check(const potnil_matrix* const* potents, size_t potent_count, const potnil_matrix* nilpotent,
                           const potnil_matrix* target, potnil_certificate* out) {
    return guarded([&] {
        require(nilpotent && target && out && (potents || potent_count == 0), "null argument");
        std::vector<potnil::Matrix> es;
        for (std::size_t i = 0; i < potent_count; ++i) es.push_back(potents[i]->m);
        fill_certificate(potnil::certify(target->m, es, nilpotent->m), out);
    });
}

potnil_status potnil_can_decompose(const potnil_matrix* companion, int* out) {
    return guarded([&] { *out = potnil::can_decompose(as_companion(companion)); });
}

potnil_status potnil_decompose_companion(const potnil_matrix* companion, size_t m, potnil_decomposition** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = new potnil_decomposition{potnil::decompose_m_potents(as_companion(companion), m)};
    });
}

potnil_status potnil_decompose_matrix(const potnil_matrix* a, size_t m, potnil_decomposition** out,
                                      size_t* block_index) {
    try {
        require(a && out, "null argument");
        *out = new potnil_decomposition{potnil::decompose_matrix(a->m, m)};
        g_last_error.clear();
        return POTNIL_OK;
    } catch (const potnil::BlockCriterionFailed& e) {
        if (block_index) *block_index = e.block_index();
        return fail(POTNIL_ERR_BLOCK_CRITERION_FAILED, e.what());
    } catch (...) {
        return guarded([] { throw; });
    }
}

potnil_status potnil_brute_force(const potnil_matrix* a, uint64_t budget, unsigned jobs, potnil_decomposition** out) {
    return guarded([&] {
        require(a && out, "null argument");
        *out = nullptr;
        auto d = potnil::brute_force_decompose(a->m, budget ? budget : potnil::kDefaultBudget, jobs);
        if (d) *out = new potnil_decomposition{std::move(*d)};
    });
}

void potnil_decomposition_free(potnil_decomposition* d) { delete d; }

size_t potnil_decomposition_potent_count(const potnil_decomposition* d) { return d->d.potents.size(); }

potnil_status potnil_decomposition_potent(const potnil_decomposition* d, size_t index, potnil_matrix** out) {
    return guarded([&] {
        require(index < d->d.potents.size(), "potent index out of range");
        *out = wrap(d->d.potents[index]);
    });
}

potnil_status potnil_decomposition_nilpotent(const potnil_decomposition* d, potnil_matrix** out) {
    return guarded([&] { *out = wrap(d->d.nilpotent); });
}

void potnil_decomposition_certificate(const potnil_decomposition* d, potnil_certificate* out) {
    fill_certificate(d->d.certificate, out);
}

potnil_status potnil_decomposition_certificate_text(const potnil_decomposition* d, char** out) {
    return guarded([&] { *out = dup_string(d->d.certificate.to_string()); });
}

potnil_status potnil_similar(const potnil_matrix* companion, const char* prefix_csv, potnil_similarity** out) {
    return guarded([&] {
        require(companion && prefix_csv && out, "null argument");
        const auto c = as_companion(companion);
        const auto prefix = parse_csv(*c.field(), prefix_csv);
        auto r = prefix.size() == c.dim() ? potnil::full_shift_similarity(c, prefix)
                                          : potnil::shift_similarity(c, prefix);
        *out = new potnil_similarity{r.modified.realize(), r.witness};
    });
}

void potnil_similarity_free(potnil_similarity* s) { delete s; }

potnil_status potnil_similarity_modified(const potnil_similarity* s, potnil_matrix** out) {
    return guarded([&] { *out = wrap(s->modified); });
}

potnil_status potnil_similarity_p(const potnil_similarity* s, potnil_matrix** out) {
    return guarded([&] { *out = wrap(s->witness.p()); });
}

potnil_status potnil_similarity_p_inv(const potnil_similarity* s, potnil_matrix** out) {
    return guarded([&] { *out = wrap(s->witness.p_inv()); });
}

potnil_status potnil_rcf_compute(const potnil_matrix* a, potnil_rcf** out) {
    return guarded([&] {
        require(a && out, "null argument");
        *out = new potnil_rcf{potnil::frobenius_form(a->m)};
    });
}

void potnil_rcf_free(potnil_rcf* r) { delete r; }

size_t potnil_rcf_factor_count(const potnil_rcf* r) { return r->form.invariant_factors.size(); }

potnil_status potnil_rcf_factor(const potnil_rcf* r, size_t index, char** out) {
    return guarded([&] {
        require(index < r->form.invariant_factors.size(), "factor index out of range");
        *out = dup_string(r->form.invariant_factors[index].to_string());
    });
}

potnil_status potnil_rcf_block_diagonal(const potnil_rcf* r, potnil_matrix** out) {
    return guarded([&] { *out = wrap(r->form.block_diagonal()); });
}

potnil_status potnil_rcf_witness(const potnil_rcf* r, potnil_matrix** p, potnil_matrix** p_inv) {
    return guarded([&] {
        require(p && p_inv, "null argument");
        auto first = std::unique_ptr<potnil_matrix>(wrap(r->form.witness.p()));
        *p_inv = wrap(r->form.witness.p_inv());
        *p = first.release();
    });
}

potnil_status potnil_enumerate(const potnil_field* field, size_t n, const potnil_enumerate_options* options,
                               potnil_enum_report** out) {
    return guarded([&] {
        require(field && out, "null argument");
        potnil::EnumerationOptions opts;
        if (options) {
            if (options->budget) opts.budget = options->budget;
            opts.jobs = options->jobs ? options->jobs : 1;
            opts.with_oracle = options->with_oracle != 0;
        }
        *out = new potnil_enum_report{potnil::enumerate_theorem(field->ptr, n, opts)};
    });
}

void potnil_enum_report_free(potnil_enum_report* r) { delete r; }

void potnil_enum_report_counts(const potnil_enum_report* r, potnil_enum_counts* out) {
    const auto& rep = r->report;
    out->total = rep.total;
    out->criterion = rep.criterion_pass;
    out->constructive = rep.constructive_pass;
    out->oracle = rep.oracle_pass ? static_cast<int64_t>(*rep.oracle_pass) : -1;
    out->mismatches = rep.mismatches.size();
}

potnil_status potnil_enum_report_summary(const potnil_enum_report* r, char** out) {
    return guarded([&] { *out = dup_string(r->report.summary()); });
}

potnil_status potnil_enum_report_csv(const potnil_enum_report* r, char** out) {
    return guarded([&] { *out = dup_string(r->report.to_csv()); });
}

potnil_status potnil_prescribed(uint64_t p, size_t n, const potnil_prescribed_options* options,
                                potnil_prescribed_report** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        potnil::PrescribedOptions opts;
        if (options) {
            if (options->budget) opts.budget = options->budget;
            opts.jobs = options->jobs ? options->jobs : 1;
            if (options->sample != 0.0) opts.sample = options->sample;
            opts.seed = options->seed;
        }
        *out = new potnil_prescribed_report{potnil::enumerate_prescribed(p, n, opts)};
    });
}

void potnil_prescribed_report_free(potnil_prescribed_report* r) { delete r; }

void potnil_prescribed_report_counts(const potnil_prescribed_report* r, potnil_prescribed_counts* out) {
    out->instances = r->report.total_instances;
    out->searched = r->report.searched;
    out->found = r->report.found;
    out->failures = r->report.failures.size();
}

potnil_status potnil_prescribed_report_summary(const potnil_prescribed_report* r, char** out) {
    return guarded([&] { *out = dup_string(r->report.summary()); });
}

}  // extern "C"
