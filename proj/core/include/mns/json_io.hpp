#pragma once

#include <string>

#include <json.hpp>

#include "mns/criteria.hpp"
#include "mns/digits.hpp"
#include "mns/lattice.hpp"
#include "mns/norms.hpp"
#include "mns/representation.hpp"
#include "mns/spectral.hpp"

namespace mns {

/// Insertion-ordered JSON so identical inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

/// {"rat": "p/q", "dec": "0.123456789"} - exact value plus a readable
/// fixed-point approximation.
Json rat_json(const Rat& x);
Json rat_interval_json(const RatInterval& iv);

/// Plain JSON number when the value is safely representable (|v| < 2^53),
/// decimal string otherwise.
Json int_json(const Int& v);
Json int_vec_json(const IntVec& v);
Json int_matrix_json(const IntMatrix& m);
Json rat_matrix_json(const RatMatrix& m);

Int int_from_json(const Json& j);
IntVec int_vec_from_json(const Json& j);

struct MatrixDocument {
    int n = 0;
    IntMatrix A;
    std::string name;
};

/// Schema: {"n": int, "rows": [[entry, ...], ...], "name"?: string} with
/// integer entries given as numbers or decimal strings. Throws ParseError.
MatrixDocument parse_matrix_document(const std::string& text);

/// Same schema with entries extended to "p/q" rationals and [re, im]
/// complex pairs, for lattice basis and ambient-map files.
struct GaussMatrixDocument {
    int n = 0;
    GaussMatrix M;
    std::string name;
};
GaussMatrixDocument parse_gauss_matrix_document(const std::string& text);

/// Vector argument syntax: comma-separated integers, e.g. "3,-1,0".
IntVec parse_vector_arg(const std::string& text, int n);

Json digit_set_json(const DigitSet& ds);
Json sigma_bounds_json(const SigmaBounds& sb);
Json dilation_report_json(const DilationReport& rep);
Json spectral_cert_json(const SpectralCert& cert);
Json bounds_report_json(const BoundsReport& br);
Json cycle_json(const Cycle& c);
Json pseudodigit_table_json(const PseudodigitTable& table, bool include_search_points = false);
Json representation_json(const Representation& rep);
Representation representation_from_json(const Json& j);
Json classification_json(const Classification& c);
Json orbit_trace_json(const OrbitTrace& tr);
Json condition_report_json(const ConditionReport& rep);
Json power_result_json(const PowerResult& pr);
Json cross_validation_json(const CrossValidation& cv);
Json lattice_context_json(const LatticeContext& ctx);

/// Header x1,...,xn,tag; radix rows (sorted) then pseudo rows (sorted),
/// tags "radix" / "pseudo". Deduplicated point lists. LF newlines.
std::string atlas_csv(const Atlas& atlas, int n);

/// Canonical dump: two-space indent, LF, trailing newline.
std::string json_text(const Json& j);

}  // namespace mns
