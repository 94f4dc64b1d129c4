#include "adqec/recovery.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace adqec {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

Vector DampedPairBasis::f_vector(int dim) const {
    Vector v = Vector::Zero(dim);
    uint32_t comp = ~representative & CodeWord(0, n).mask();
    v[representative] = f_coeff_u;
    v[comp] = f_coeff_ubar;
    return v;
}

Vector DampedPairBasis::g_vector(int dim) const {
    Vector v = Vector::Zero(dim);
    uint32_t comp = ~representative & CodeWord(0, n).mask();
    v[representative] = g_coeff_u;
    v[comp] = g_coeff_ubar;
    return v;
}

DampedPairBasis damped_pair_vectors(const CodeWord& u, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must lie in [0, 1]");
    CodeWord rep = std::min(u, u.complement());
    // The channel damps |u> by sqrt(1-gamma)^{weight(u)}, so the image of
    // (|u>+|u~>)/sqrt(2) lies along a|u> + b|u~> with these coefficients.
    double a = std::pow(1.0 - gamma, rep.weight() / 2.0);
    double b = std::pow(1.0 - gamma, rep.complement().weight() / 2.0);
    double norm = std::hypot(a, b);
    if (norm == 0.0) {
        // gamma = 1 with both weights positive: any orthonormal pair works.
        a = b = kInvSqrt2;
        norm = 1.0;
    }
    DampedPairBasis basis;
    basis.representative = rep.bits;
    basis.n = u.n;
    basis.f_coeff_u = a / norm;
    basis.f_coeff_ubar = b / norm;
    basis.g_coeff_u = b / norm;
    basis.g_coeff_ubar = -a / norm;
    return basis;
}

int RecoveryChannel::assigned_rank() const {
    int rank = 0;
    for (const auto& element : elements) rank += static_cast<int>(element.size());
    return rank;
}

Vector RecoveryChannel::source_vector(const Assignment& a) const {
    const int d = dim();
    switch (a.kind) {
        case SourceKind::Basis: {
            Vector v = Vector::Zero(d);
            v[a.word] = 1.0;
            return v;
        }
        case SourceKind::F:
            return damped_pair_vectors(CodeWord(a.word, code.n), gamma).f_vector(d);
        case SourceKind::G:
            return damped_pair_vectors(CodeWord(a.word, code.n), gamma).g_vector(d);
    }
    throw std::logic_error("unreachable");
}

Vector RecoveryChannel::target_vector(const Assignment& a) const {
    Vector v = Vector::Zero(dim());
    uint32_t comp = ~a.target_pair & CodeWord(0, code.n).mask();
    v[a.target_pair] = kInvSqrt2;
    v[comp] = kInvSqrt2;
    return v;
}

KrausChannel RecoveryChannel::to_kraus() const {
    KrausChannel ch;
    ch.dim = dim();
    auto support = [](const Vector& v) {
        std::vector<uint32_t> idx;
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (v[i] != Complex(0.0)) idx.push_back(static_cast<uint32_t>(i));
        return idx;
    };
    for (const auto& element : elements) {
        SparseOperator op;
        op.dim = ch.dim;
        for (const auto& a : element) {
            Vector s = source_vector(a);
            Vector t = target_vector(a);
            for (uint32_t i : support(t))
                for (uint32_t j : support(s)) op.add(i, j, t[i] * std::conj(s[j]));
        }
        ch.elements.push_back(std::move(op));
    }
    if (!completion_basis.empty()) {
        SparseOperator completion;
        completion.dim = ch.dim;
        for (const auto& d : completion_basis) {
            auto idx = support(d);
            for (uint32_t i : idx)
                for (uint32_t j : idx) completion.add(i, j, d[i] * std::conj(d[j]));
        }
        ch.elements.push_back(std::move(completion));
    }
    return ch;
}

RecoveryChannel build_recovery(const CodeSet& code, double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in [0, 1)");
    ValidationReport report = validate_code_set(code);
    if (!report.valid())
        throw std::invalid_argument("code set fails validation: " + report.summary(code.n));

    RecoveryChannel r;
    r.gamma = gamma;
    r.code = code;
    const int n = code.n;
    const uint32_t dim = 1u << n;
    const uint32_t mask = CodeWord(0, n).mask();
    const auto reps = code.pair_representatives();

    // Step 1: one element correcting every damped codeword image f(u).
    std::vector<Assignment> first;
    for (uint32_t rep : reps) first.push_back({SourceKind::F, rep, rep});
    r.elements.push_back(std::move(first));

    std::set<uint32_t> used;        // words consumed by basis or g assignments
    std::set<uint32_t> g_assigned;  // pair representatives whose g was consumed

    // Error vectors in weight-then-dictionary order, one element per vector;
    // higher-weight elements implement the maximum-likelihood correction of
    // multi-decay events.
    std::vector<uint32_t> errors(dim - 1);
    std::iota(errors.begin(), errors.end(), 1u);
    std::stable_sort(errors.begin(), errors.end(), [](uint32_t a, uint32_t b) {
        int wa = std::popcount(a), wb = std::popcount(b);
        return wa != wb ? wa < wb : a < b;
    });

    for (uint32_t e : errors) {
        std::vector<Assignment> element;
        std::set<uint32_t> element_targets;
        for (uint32_t u : code.words) {
            if ((u & e) != e) continue;  // decay e cannot happen to u
            uint32_t damped = u ^ e;
            uint32_t damped_comp = ~damped & mask;
            uint32_t target = std::min(u, ~u & mask);
            if (code.contains(damped) && !used.count(damped) && !used.count(damped_comp)) {
                // Step 3.1: the damped word is itself a codeword; consume the
                // pair's g direction.
                uint32_t rep = std::min(damped, damped_comp);
                element.push_back({SourceKind::G, rep, target});
                used.insert(damped);
                used.insert(damped_comp);
                g_assigned.insert(rep);
            } else if (!used.count(damped)) {
                element.push_back({SourceKind::Basis, damped, target});
                used.insert(damped);
            } else {
                continue;
            }
            if (!element_targets.insert(target).second)
                throw std::logic_error("duplicate target within one operator element");
        }
        if (!element.empty()) r.elements.push_back(std::move(element));
        if (static_cast<uint32_t>(r.assigned_rank()) == dim) break;
    }

    // Completion: every direction never attributed to a codeword maps to
    // itself.
    for (uint32_t rep : reps)
        if (!g_assigned.count(rep)) {
            Vector g = damped_pair_vectors(CodeWord(rep, n), gamma).g_vector(static_cast<int>(dim));
            r.completion_basis.push_back(std::move(g));
        }
    for (uint32_t y = 0; y < dim; ++y) {
        if (code.contains(y) || used.count(y)) continue;
        Vector v = Vector::Zero(static_cast<int>(dim));
        v[y] = 1.0;
        r.completion_basis.push_back(std::move(v));
    }
    if (r.assigned_rank() + r.completion_rank() != static_cast<int>(dim))
        throw std::logic_error("rank accounting does not cover the full space");
    return r;
}

RecoveryReport verify_recovery(const RecoveryChannel& r, double tol) {
    RecoveryReport report;
    const int dim = r.dim();

    std::vector<Vector> sources;
    for (const auto& element : r.elements)
        for (const auto& a : element) sources.push_back(r.source_vector(a));
    for (const auto& d : r.completion_basis) sources.push_back(d);
    Matrix b(dim, sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) b.col(static_cast<Eigen::Index>(i)) = sources[i];
    Matrix gram = b.adjoint() * b;
    report.max_gram_deviation =
        (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    report.sources_orthonormal =
        sources.size() == static_cast<std::size_t>(dim) && report.max_gram_deviation <= tol;

    KrausChannel kraus = r.to_kraus();
    Matrix tp = Matrix::Zero(dim, dim);
    for (const auto& k : kraus.elements) k.gram_into(tp);
    report.max_tp_deviation = (tp - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    report.trace_preserving = report.max_tp_deviation <= tol;

    report.targets_valid = true;
    for (const auto& element : r.elements)
        for (const auto& a : element)
            if (!r.code.contains(a.target_pair)) report.targets_valid = false;
    return report;
}

std::string RecoveryChannel::to_json() const {
    nlohmann::json j;
    j["gamma"] = gamma;
    auto elems = nlohmann::json::array();
    for (const auto& element : elements) {
        auto assignments = nlohmann::json::array();
        for (const auto& a : element) {
            const char* kind = a.kind == SourceKind::Basis ? "basis"
                               : a.kind == SourceKind::F   ? "f"
                                                           : "g";
            assignments.push_back({{"source", {{"kind", kind},
                                               {"word", CodeWord(a.word, code.n).to_string()}}},
                                   {"target_pair", CodeWord(a.target_pair, code.n).to_string()}});
        }
        elems.push_back({{"assignments", std::move(assignments)}});
    }
    j["elements"] = std::move(elems);
    j["completion_rank"] = completion_rank();
    return j.dump(2) + "\n";
}

}  // namespace adqec
