#include "matslocc/json_io.hpp"

#include <cstdio>
#include <fstream>

#include "matslocc/errors.hpp"

namespace matslocc {

Json json_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return Json::parse(buf);
}

Json matrix_space_to_json(const MatrixSpace& s) {
    Json j;
    j["rows"] = s.rows();
    j["cols"] = s.cols();
    Json basis = Json::array();
    for (const auto& b : s.canonical_basis()) {
        Json mat = Json::array();
        for (std::size_t i = 0; i < b.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(format_scalar(b.at(i, c)));
            mat.push_back(std::move(row));
        }
        basis.push_back(std::move(mat));
    }
    j["basis"] = std::move(basis);
    return j;
}

MatrixSpace matrix_space_from_json(const Json& j) {
    try {
        std::size_t rows = j.at("rows").get<std::size_t>();
        std::size_t cols = j.at("cols").get<std::size_t>();
        std::vector<Matrix> gens;
        for (const auto& mat : j.at("basis")) {
            if (mat.size() != rows) throw ParseError("matrix space: wrong row count");
            Matrix m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i) {
                const auto& row = mat.at(i);
                if (row.size() != cols) throw ParseError("matrix space: ragged row");
                for (std::size_t c = 0; c < cols; ++c)
                    m.at(i, c) = parse_scalar(row.at(c).get<std::string>());
            }
            gens.push_back(std::move(m));
        }
        if (gens.empty()) throw ParseError("matrix space: empty basis");
        return MatrixSpace(rows, cols, std::move(gens));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("matrix space JSON: ") + e.what());
    }
}

Json state_to_json(const TripartiteState& st) {
    Json j;
    j["dims"] = {st.dim_a, st.dim_b, st.dim_c};
    Json amps = Json::array();
    for (const auto& a : st.amplitudes) {
        Json e;
        e["a"] = a.a;
        e["b"] = a.b;
        e["c"] = a.c;
        e["value"] = format_scalar(a.value);
        amps.push_back(std::move(e));
    }
    j["amplitudes"] = std::move(amps);
    return j;
}

TripartiteState state_from_json(const Json& j) {
    try {
        TripartiteState st;
        const auto& dims = j.at("dims");
        if (dims.size() != 3) throw ParseError("state: dims must have three entries");
        st.dim_a = dims.at(0).get<std::size_t>();
        st.dim_b = dims.at(1).get<std::size_t>();
        st.dim_c = dims.at(2).get<std::size_t>();
        for (const auto& e : j.at("amplitudes"))
            st.amplitudes.push_back({e.at("a").get<std::size_t>(), e.at("b").get<std::size_t>(),
                                     e.at("c").get<std::size_t>(),
                                     parse_scalar(e.at("value").get<std::string>())});
        st.validate();
        return st;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("state JSON: ") + e.what());
    }
}

Json report_to_json(const MaxRankReport& r) {
    Json j;
    j["prime"] = r.prime;
    j["coeffs"] = r.witness_coeffs;
    j["rank"] = r.rank;
    j["trials"] = r.trials;
    j["failure_bound"] = format_rational(r.failure_bound);
    return j;
}

namespace {

Json subspace_to_json(const Subspace& s) {
    Json j;
    j["ambient"] = s.ambient;
    Json basis = Json::array();
    for (const auto& v : s.basis) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(format_scalar(x));
        basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    return j;
}

} // namespace

Json witness_to_json(const ShrunkWitness& w) {
    Json j;
    j["u"] = subspace_to_json(w.u);
    j["su"] = subspace_to_json(w.su);
    j["shrinkage"] = w.shrinkage();
    return j;
}

Json decision_to_json(const ShrunkDecision& d) {
    Json j;
    j["decision"] = d.shrunk ? "shrunk" : "no-shrunk";
    if (d.certificate) {
        Json c;
        c["k"] = d.certificate->k;
        c["witness"] = report_to_json(d.certificate->report);
        c["exact_rank"] = d.certificate->exact_rank;
        j["certificate"] = std::move(c);
    } else {
        j["certificate"] = nullptr;
    }
    j["failure_bound"] = format_rational(d.failure_bound);
    j["largest_k_tested"] = d.largest_k_tested;
    return j;
}

Json verdict_to_json(const ConvertibilityVerdict& v) {
    Json j;
    j["copies"] = v.copies;
    j["target_srk"] = v.target_srk;
    j["verdict"] = v.convertible ? "yes" : "no";
    j["max_copies_extractable"] = v.max_copies_extractable;
    j["certified"] = v.certified;
    j["estimate"] = report_to_json(v.estimate);
    return j;
}

Json rate_to_json(const RateBounds& r) {
    Json j;
    j["target_srk"] = r.target_srk;
    j["lower"] = json_double(r.lower);
    j["upper"] = json_double(r.upper);
    j["exact"] = r.exact;
    switch (r.upper_kind) {
        case UpperBoundKind::ShrunkFree: j["upper_bound_from"] = "shrunk-free"; break;
        case UpperBoundKind::CompressionEmbedding: j["upper_bound_from"] = "compression-embedding"; break;
        case UpperBoundKind::Trivial: j["upper_bound_from"] = "trivial"; break;
    }
    return j;
}

Json profile_to_json(const AsymptoticProfile& p) {
    Json j;
    j["p"] = p.p;
    j["q"] = p.q;
    j["d"] = p.d;
    j["p_prime"] = format_rational(p.p_prime);
    j["q_prime"] = format_rational(p.q_prime);
    j["lambda"] = json_double(p.lambda);
    j["mu"] = json_double(p.mu);
    j["alpha"] = json_double(p.alpha);
    j["kl_one_minus_alpha_pprime"] = json_double(p.div_pm);
    j["kl_alpha_qprime"] = json_double(p.div_qm);
    j["mrk_infinity"] = json_double(p.mrk_infinity);
    return j;
}

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace

MatrixSpace load_matrix_space(const std::string& path) {
    return matrix_space_from_json(load_json(path));
}

TripartiteState load_state(const std::string& path) {
    return state_from_json(load_json(path));
}

} // namespace matslocc
