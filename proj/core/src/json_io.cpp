#include "mns/json_io.hpp"

#include <cstdint>
#include <sstream>

#include "mns/errors.hpp"

namespace mns {

namespace {

const Int kSafeJsonInt = (Int(1) << 53) - 1;

Int int_from_entry(const Json& j, const char* what) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError(std::string(what) + ": invalid integer string");
        }
    }
    throw ParseError(std::string(what) + ": expected an integer or a decimal string");
}

Rat rat_from_entry(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<std::int64_t>())));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw ParseError(std::string(what) + ": expected an integer or a rational string");
}

GaussRat gauss_from_entry(const Json& j, const char* what) {
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError(std::string(what) + ": complex entry must be [re, im]");
        return GaussRat(rat_from_entry(j[0], what), rat_from_entry(j[1], what));
    }
    return GaussRat(rat_from_entry(j, what));
}

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

struct DocumentShape {
    int n = 0;
    Json rows;
    std::string name;
};

DocumentShape document_shape(const std::string& text) {
    const Json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw ParseError("matrix document needs an integer field \"n\"");
    }
    DocumentShape shape;
    shape.n = doc["n"].get<int>();
    if (shape.n < 1) throw ParseError("matrix dimension must be positive");
    if (!doc.contains("rows") || !doc["rows"].is_array() ||
        doc["rows"].size() != static_cast<std::size_t>(shape.n)) {
        throw ParseError("matrix document needs an n-element array field \"rows\"");
    }
    for (const Json& row : doc["rows"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(shape.n)) {
            throw ParseError("every row must have exactly n entries");
        }
    }
    shape.rows = doc["rows"];
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
        shape.name = doc["name"].get<std::string>();
    }
    return shape;
}

std::string kind_name(RepKind k) { return k == RepKind::Radix ? "radix" : "pseudo"; }

}  // namespace

Json rat_json(const Rat& x) {
    Json j = Json::object();
    j["rat"] = rat_string(x);
    j["dec"] = decimal_string(x);
    return j;
}

Json rat_interval_json(const RatInterval& iv) {
    Json j = Json::object();
    j["lo"] = rat_json(iv.lo);
    j["hi"] = rat_json(iv.hi);
    return j;
}

Json int_json(const Int& v) {
    if (abs(v) <= kSafeJsonInt) return Json(v.get_si());
    return Json(v.get_str());
}

Json int_vec_json(const IntVec& v) {
    Json j = Json::array();
    for (const Int& x : v) j.push_back(int_json(x));
    return j;
}

Json int_matrix_json(const IntMatrix& m) {
    Json j = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(int_json(m.at(i, k)));
        j.push_back(row);
    }
    return j;
}

Json rat_matrix_json(const RatMatrix& m) {
    Json j = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(rat_string(m.at(i, k)));
        j.push_back(row);
    }
    return j;
}

Int int_from_json(const Json& j) { return int_from_entry(j, "integer"); }

IntVec int_vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of integers");
    IntVec v;
    for (const Json& e : j) v.push_back(int_from_entry(e, "vector entry"));
    return v;
}

MatrixDocument parse_matrix_document(const std::string& text) {
    const DocumentShape shape = document_shape(text);
    MatrixDocument doc;
    doc.n = shape.n;
    doc.name = shape.name;
    doc.A = IntMatrix(shape.n, shape.n);
    for (int i = 0; i < shape.n; ++i) {
        for (int k = 0; k < shape.n; ++k) {
            doc.A.at(i, k) = int_from_entry(shape.rows[static_cast<std::size_t>(i)]
                                                      [static_cast<std::size_t>(k)],
                                            "matrix entry");
        }
    }
    return doc;
}

GaussMatrixDocument parse_gauss_matrix_document(const std::string& text) {
    const DocumentShape shape = document_shape(text);
    GaussMatrixDocument doc;
    doc.n = shape.n;
    doc.name = shape.name;
    doc.M = GaussMatrix(shape.n, shape.n);
    for (int i = 0; i < shape.n; ++i) {
        for (int k = 0; k < shape.n; ++k) {
            doc.M.at(i, k) = gauss_from_entry(shape.rows[static_cast<std::size_t>(i)]
                                                        [static_cast<std::size_t>(k)],
                                              "matrix entry");
        }
    }
    return doc;
}

IntVec parse_vector_arg(const std::string& text, int n) {
    IntVec v;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) throw ParseError("empty vector component");
        const auto last = token.find_last_not_of(" \t");
        try {
            v.push_back(Int(token.substr(first, last - first + 1)));
        } catch (const std::invalid_argument&) {
            throw ParseError("invalid vector component: " + token);
        }
    }
    if (static_cast<int>(v.size()) != n) {
        throw DimensionError("vector has " + std::to_string(v.size()) + " components, expected " +
                             std::to_string(n));
    }
    return v;
}

Json digit_set_json(const DigitSet& ds) {
    Json j = Json::object();
    j["n"] = ds.n();
    j["q"] = int_json(ds.q());
    j["convention"] = convention_name(ds.convention());
    Json digits = Json::array();
    for (const IntVec& d : ds.digits()) digits.push_back(int_vec_json(d));
    j["digits"] = digits;
    j["smith_diagonal"] = int_vec_json(ds.snf().diagonal());
    return j;
}

Json sigma_bounds_json(const SigmaBounds& sb) {
    Json j = Json::object();
    j["sigma_min_lb"] = rat_json(sb.sigma_min_lb);
    j["sigma_min_ub"] = rat_json(sb.sigma_min_ub);
    j["sigma_max_ub"] = rat_json(sb.sigma_max_ub);
    return j;
}

Json dilation_report_json(const DilationReport& rep) {
    Json j = Json::object();
    j["is_dilation"] = rep.is_dilation;
    j["unit_modulus_eigenvalue"] = rep.unit_modulus_eigenvalue;
    Json cp = Json::array();
    for (const Int& c : rep.char_poly) cp.push_back(int_json(c));
    j["char_poly"] = cp;
    return j;
}

Json spectral_cert_json(const SpectralCert& cert) {
    Json j = Json::object();
    j["q_abs_det"] = int_json(cert.q_abs_det);
    j["is_dilation"] = cert.is_dilation;
    j["unit_modulus_eigenvalue"] = cert.unit_modulus_eigenvalue;
    j["sigma"] = sigma_bounds_json(cert.sigma);
    Json mu = Json::object();
    for (const auto& [key, value] : cert.mu_exceeds_results) mu[key] = value;
    j["mu_exceeds"] = mu;
    return j;
}

Json bounds_report_json(const BoundsReport& br) {
    Json j = Json::object();
    j["c_upper"] = rat_json(br.c_upper);
    j["m_lower"] = rat_json(br.m_lower);
    j["M_upper"] = rat_json(br.M_upper);
    j["rho_upper"] = rat_json(br.rho_upper);
    j["R_upper"] = rat_json(br.R_upper);
    j["candidate_radius_l2"] = rat_json(br.candidate_radius_l2);
    Json frob = Json::object();
    frob["m_lower"] = rat_json(br.m_lower_frobenius);
    frob["M_upper"] = rat_json(br.M_upper_frobenius);
    frob["rho_upper"] = rat_json(br.rho_upper_frobenius);
    j["frobenius"] = frob;
    Json pencil = Json::object();
    pencil["m_sq_lower"] = rat_json(br.m_sq_lower_pencil);
    pencil["M_sq_upper"] = rat_json(br.M_sq_upper_pencil);
    pencil["rho_sq_exact"] = rat_json(br.rho_sq_exact);
    j["pencil"] = pencil;
    j["sigma"] = sigma_bounds_json(br.sigma);
    j["j_depth"] = br.j_depth;
    j["theta_sq"] = rat_json(br.theta_sq);
    if (br.normal_exact) {
        Json ne = Json::object();
        ne["spectrum_rational"] = br.normal_exact->spectrum_rational;
        ne["m_sq"] = rat_interval_json(br.normal_exact->m_sq);
        ne["M_sq"] = rat_interval_json(br.normal_exact->M_sq);
        ne["m"] = rat_interval_json(br.normal_exact->m);
        ne["M"] = rat_interval_json(br.normal_exact->M);
        j["normal_exact"] = ne;
    } else {
        j["normal_exact"] = nullptr;
    }
    if (br.singular_value_R_bound) {
        j["singular_value_R_bound"] = rat_json(*br.singular_value_R_bound);
    } else {
        j["singular_value_R_bound"] = nullptr;
    }
    j["gram"] = rat_matrix_json(br.gram);
    return j;
}

Json cycle_json(const Cycle& c) {
    Json j = Json::object();
    j["representative"] = int_vec_json(c.representative());
    j["length"] = c.length();
    Json elems = Json::array();
    for (const IntVec& e : c.elements) elems.push_back(int_vec_json(e));
    j["elements"] = elems;
    Json digs = Json::array();
    for (const IntVec& d : c.step_digits) digs.push_back(int_vec_json(d));
    j["step_digits"] = digs;
    return j;
}

Json pseudodigit_table_json(const PseudodigitTable& table, bool include_search_points) {
    Json j = Json::object();
    j["yields_radix"] = yields_radix(table);
    j["cycle_count"] = static_cast<int>(table.cycles.size());
    Json s = Json::array();
    for (const IntVec& v : table.S) s.push_back(int_vec_json(v));
    j["S"] = s;
    Json cycles = Json::array();
    for (const Cycle& c : table.cycles) cycles.push_back(cycle_json(c));
    j["cycles"] = cycles;
    j["ball_radius_used"] = rat_json(table.ball_radius_used);
    j["search_point_count"] = static_cast<std::int64_t>(table.search_points.size());
    if (include_search_points) {
        Json pts = Json::array();
        for (const IntVec& p : table.search_points) pts.push_back(int_vec_json(p));
        j["search_points"] = pts;
    }
    return j;
}

Json representation_json(const Representation& rep) {
    Json j = Json::object();
    j["kind"] = kind_name(rep.kind);
    j["N"] = rep.N();
    Json digits = Json::array();
    for (const IntVec& d : rep.digits) digits.push_back(int_vec_json(d));
    j["digits"] = digits;
    if (rep.pseudodigit) {
        j["pseudodigit"] = int_vec_json(*rep.pseudodigit);
    } else {
        j["pseudodigit"] = nullptr;
    }
    return j;
}

Representation representation_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("representation must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("representation needs a string field \"kind\"");
    }
    const std::string kind = j["kind"].get<std::string>();
    Representation rep;
    if (kind == "radix") {
        rep.kind = RepKind::Radix;
    } else if (kind == "pseudo") {
        rep.kind = RepKind::Pseudo;
    } else {
        throw ParseError("representation kind must be \"radix\" or \"pseudo\"");
    }
    if (!j.contains("digits") || !j["digits"].is_array()) {
        throw ParseError("representation needs an array field \"digits\"");
    }
    for (const Json& d : j["digits"]) rep.digits.push_back(int_vec_from_json(d));
    if (rep.kind == RepKind::Pseudo) {
        if (!j.contains("pseudodigit") || j["pseudodigit"].is_null()) {
            throw ParseError("pseudo representation needs \"pseudodigit\"");
        }
        rep.pseudodigit = int_vec_from_json(j["pseudodigit"]);
    }
    return rep;
}

Json classification_json(const Classification& c) {
    Json j = Json::object();
    j["kind"] = kind_name(c.kind);
    if (c.pseudodigit) {
        j["pseudodigit"] = int_vec_json(*c.pseudodigit);
    } else {
        j["pseudodigit"] = nullptr;
    }
    return j;
}

Json orbit_trace_json(const OrbitTrace& tr) {
    Json j = Json::object();
    j["outcome"] =
        tr.outcome == OrbitOutcome::TerminatedAtZero ? "terminated_at_zero" : "entered_cycle";
    if (tr.outcome == OrbitOutcome::EnteredCycle) {
        j["entry_index"] = tr.entry_index;
    } else {
        j["entry_index"] = nullptr;
    }
    Json states = Json::array();
    for (const IntVec& s : tr.states) states.push_back(int_vec_json(s));
    j["states"] = states;
    Json digits = Json::array();
    for (const IntVec& d : tr.digits) digits.push_back(int_vec_json(d));
    j["digits"] = digits;
    return j;
}

Json condition_report_json(const ConditionReport& rep) {
    Json j = Json::object();
    j["is_dilation"] = rep.is_dilation;
    j["mu_gt_2sqrtn"] = rep.mu_gt_2sqrtn;
    j["mu_gt_2"] = rep.mu_gt_2;
    j["jeong_C_in_AU"] = rep.jeong_C_in_AU;
    j["jeong_C_in_AF"] = rep.jeong_C_in_AF;
    j["verdict"] = verdict_name(rep.verdict);
    return j;
}

Json power_result_json(const PowerResult& pr) {
    Json j = Json::object();
    j["beta"] = pr.beta;
    j["threshold"] = threshold_name(pr.threshold);
    j["certificate"] = spectral_cert_json(pr.certificate);
    Json trace = Json::array();
    for (const SigmaBounds& sb : pr.trace) trace.push_back(sigma_bounds_json(sb));
    j["trace"] = trace;
    return j;
}

Json cross_validation_json(const CrossValidation& cv) {
    Json j = Json::object();
    j["verdict"] = verdict_name(cv.report.verdict);
    j["yields_radix"] = cv.yields_radix;
    j["consistent"] = cv.consistent;
    return j;
}

Json lattice_context_json(const LatticeContext& ctx) {
    Json j = Json::object();
    j["n"] = ctx.B.rows();
    Json basis = Json::array();
    for (int i = 0; i < ctx.M.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < ctx.M.cols(); ++k) row.push_back(gauss_string(ctx.M.at(i, k)));
        basis.push_back(row);
    }
    j["basis"] = basis;
    j["B"] = int_matrix_json(ctx.B);
    return j;
}

std::string atlas_csv(const Atlas& atlas, int n) {
    std::string out;
    for (int i = 1; i <= n; ++i) {
        out += "x" + std::to_string(i) + ",";
    }
    out += "tag\n";
    auto append_point = [&out](const IntVec& p, const char* tag) {
        for (const Int& c : p) {
            out += c.get_str();
            out += ",";
        }
        out += tag;
        out += "\n";
    };
    for (const IntVec& p : atlas.radix_points) append_point(p, "radix");
    for (const PseudoAtlasEntry& e : atlas.pseudo_entries) append_point(e.point, "pseudo");
    return out;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mns
