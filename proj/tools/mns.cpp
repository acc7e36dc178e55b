#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mns/criteria.hpp"
#include "mns/digits.hpp"
#include "mns/errors.hpp"
#include "mns/json_io.hpp"
#include "mns/lattice.hpp"
#include "mns/norms.hpp"
#include "mns/representation.hpp"

namespace {

using namespace mns;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + out_path);
    out << text;
}

DigitConvention parse_convention(const std::string& s) {
    if (s == "canonical") return DigitConvention::Canonical;
    if (s == "f") return DigitConvention::LowerHalfOpen;
    if (s == "u") return DigitConvention::UpperHalfOpen;
    throw ParseError("unknown convention (expected canonical, f, or u): " + s);
}

MuThreshold parse_threshold(const std::string& s) {
    if (s == "mu2") return MuThreshold::MuGt2;
    if (s == "mu2sqrtn") return MuThreshold::MuGt2SqrtN;
    throw ParseError("unknown threshold (expected mu2 or mu2sqrtn): " + s);
}

void require_dilation(const IntMatrix& A) {
    if (!verify_dilation(A)) {
        throw NotDilationError("matrix is not a dilation (an eigenvalue has modulus <= 1)");
    }
}

Json header_json(const MatrixDocument& doc) {
    Json j = Json::object();
    if (doc.name.empty()) {
        j["name"] = nullptr;
    } else {
        j["name"] = doc.name;
    }
    j["n"] = doc.n;
    j["matrix"] = int_matrix_json(doc.A);
    return j;
}

struct PipelineResult {
    DigitSet ds;
    BoundsReport br;
    PseudodigitTable table;
};

PipelineResult run_pipeline(const IntMatrix& A, DigitConvention conv) {
    require_dilation(A);
    PipelineResult p{digit_set(A, conv), bounds_report(make_norm_evaluator(A)), {}};
    p.table = pseudodigits(p.ds, p.br);
    return p;
}

int cmd_digits(const std::string& file, const std::string& conv, bool allow_non_dilation,
               const std::string& out) {
    const MatrixDocument doc = parse_matrix_document(read_file(file));
    if (!allow_non_dilation) require_dilation(doc.A);
    const DigitSet ds = digit_set(doc.A, parse_convention(conv));
    Json j = header_json(doc);
    j["digit_set"] = digit_set_json(ds);
    write_output(json_text(j), out);
    return 0;
}

int cmd_pseudodigits(const std::string& file, const std::string& conv, bool include_points,
                     const std::string& out) {
    const MatrixDocument doc = parse_matrix_document(read_file(file));
    const PipelineResult p = run_pipeline(doc.A, parse_convention(conv));
    Json j = header_json(doc);
    j["digit_set"] = digit_set_json(p.ds);
    j["bounds"] = bounds_report_json(p.br);
    j["pseudodigits"] = pseudodigit_table_json(p.table, include_points);
    std::string text = json_text(j);
    if (yields_radix(p.table)) text += "yields radix representation\n";
    write_output(text, out);
    return 0;
}

int cmd_represent(const std::string& file, const std::string& vector_arg,
                  const std::string& decode_file, const std::string& conv,
                  const std::string& out) {
    const MatrixDocument doc = parse_matrix_document(read_file(file));
    if (vector_arg.empty() == decode_file.empty()) {
        throw ParseError("exactly one of --vector and --decode is required");
    }
    Json j = header_json(doc);
    if (!vector_arg.empty()) {
        const IntVec x = parse_vector_arg(vector_arg, doc.n);
        const PipelineResult p = run_pipeline(doc.A, parse_convention(conv));
        j["vector"] = int_vec_json(x);
        j["representation"] = representation_json(represent(p.ds, p.table, x));
    } else {
        require_dilation(doc.A);
        const DigitSet ds = digit_set(doc.A, parse_convention(conv));
        Json rep_doc;
        try {
            rep_doc = Json::parse(read_file(decode_file));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid representation JSON: ") + e.what());
        }
        // Accept either a bare representation object or the output of the
        // encode direction.
        const Json& rep_json =
            rep_doc.is_object() && rep_doc.contains("representation") ? rep_doc["representation"]
                                                                      : rep_doc;
        const Representation rep = representation_from_json(rep_json);
        j["vector"] = int_vec_json(evaluate(ds, rep));
    }
    write_output(json_text(j), out);
    return 0;
}

int cmd_check(const std::string& file, const std::string& conv, const std::string& out) {
    const MatrixDocument doc = parse_matrix_document(read_file(file));
    const ConditionReport report = check_conditions(doc.A);
    Json j = header_json(doc);
    j["condition_report"] = condition_report_json(report);
    if (report.is_dilation) {
        const PipelineResult p = run_pipeline(doc.A, parse_convention(conv));
        const CrossValidation cv = cross_validate_with(report, yields_radix(p.table));
        j["cross_validation"] = cross_validation_json(cv);
    } else {
        j["cross_validation"] = nullptr;
    }
    write_output(json_text(j), out);
    return 0;
}

int cmd_power(const std::string& file, const std::string& threshold, int beta_max,
              const std::string& out) {
    const MatrixDocument doc = parse_matrix_document(read_file(file));
    const PowerResult pr = find_power(doc.A, parse_threshold(threshold), beta_max);
    Json j = header_json(doc);
    j["power"] = power_result_json(pr);
    write_output(json_text(j), out);
    return 0;
}

int cmd_atlas(const std::string& file, int n_max, const std::string& conv,
              const std::string& out) {
    const MatrixDocument doc = parse_matrix_document(read_file(file));
    const PipelineResult p = run_pipeline(doc.A, parse_convention(conv));
    const Atlas at = atlas(p.ds, p.table, n_max);
    write_output(atlas_csv(at, doc.n), out);
    return 0;
}

int cmd_lattice(const std::string& map_file, const std::string& basis_file,
                const std::string& conv, const std::string& out) {
    const GaussMatrixDocument basis = parse_gauss_matrix_document(read_file(basis_file));
    const GaussMatrixDocument ambient = parse_gauss_matrix_document(read_file(map_file));
    const LatticeContext ctx = transport(basis.M, ambient.M);

    Json j = Json::object();
    j["basis_name"] = basis.name.empty() ? Json(nullptr) : Json(basis.name);
    j["map_name"] = ambient.name.empty() ? Json(nullptr) : Json(ambient.name);
    j["context"] = lattice_context_json(ctx);
    j["condition_report"] = condition_report_json(check_conditions(ctx.B));

    if (verify_dilation(ctx.B)) {
        const PipelineResult p = run_pipeline(ctx.B, parse_convention(conv));
        j["digit_set"] = digit_set_json(p.ds);
        Json gamma = Json::array();
        for (const IntVec& d : p.ds.digits()) {
            Json row = Json::array();
            for (const GaussRat& z : to_ambient(ctx, d)) row.push_back(gauss_string(z));
            gamma.push_back(row);
        }
        j["gamma_digits"] = gamma;
        j["pseudodigits"] = pseudodigit_table_json(p.table);
    } else {
        j["digit_set"] = nullptr;
        j["gamma_digits"] = nullptr;
        j["pseudodigits"] = nullptr;
    }
    write_output(json_text(j), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact positional number systems on Z^n with a matrix base"};
    app.require_subcommand(1);

    std::string file, conv = "canonical", out, vector_arg, decode_file, threshold = "mu2";
    std::string basis_file;
    bool allow_non_dilation = false;
    bool include_points = false;
    int beta_max = 64;
    int n_max = 6;

    CLI::App* digits = app.add_subcommand("digits", "canonical digit set of a matrix base");
    digits->add_option("file", file, "matrix JSON file")->required();
    digits->add_option("--convention", conv, "digit box convention: canonical, f, or u");
    digits->add_flag("--allow-non-dilation", allow_non_dilation,
                     "build the residue digit set even when A is not a dilation");
    digits->add_option("--out", out, "write output to a file instead of stdout");

    CLI::App* pseudo = app.add_subcommand("pseudodigits", "cycle search with certified bounds");
    pseudo->add_option("file", file, "matrix JSON file")->required();
    pseudo->add_option("--convention", conv, "digit box convention: canonical, f, or u");
    pseudo->add_flag("--include-search-points", include_points,
                     "embed every examined lattice point in the report");
    pseudo->add_option("--out", out, "write output to a file instead of stdout");

    CLI::App* rep = app.add_subcommand("represent", "encode a vector or decode a representation");
    rep->add_option("file", file, "matrix JSON file")->required();
    rep->add_option("--vector", vector_arg, "comma-separated integer vector to encode");
    rep->add_option("--decode", decode_file, "representation JSON file to evaluate");
    rep->add_option("--convention", conv, "digit box convention: canonical, f, or u");
    rep->add_option("--out", out, "write output to a file instead of stdout");

    CLI::App* check = app.add_subcommand("check", "sufficient radix conditions + cross-validation");
    check->add_option("file", file, "matrix JSON file")->required();
    check->add_option("--convention", conv, "digit box convention: canonical, f, or u");
    check->add_option("--out", out, "write output to a file instead of stdout");

    CLI::App* power = app.add_subcommand("power", "least power certified by a mu threshold");
    power->add_option("file", file, "matrix JSON file")->required();
    power->add_option("--threshold", threshold, "mu2 (mu > 2) or mu2sqrtn (mu > 2 sqrt n)");
    power->add_option("--beta-max", beta_max, "largest exponent tried");
    power->add_option("--out", out, "write output to a file instead of stdout");

    CLI::App* atlas_cmd = app.add_subcommand("atlas", "CSV point cloud of all representations");
    atlas_cmd->add_option("file", file, "matrix JSON file")->required();
    atlas_cmd->add_option("--n-max", n_max, "largest digit-string length exponent");
    atlas_cmd->add_option("--convention", conv, "digit box convention: canonical, f, or u");
    atlas_cmd->add_option("--out", out, "write output to a file instead of stdout");

    CLI::App* lattice_cmd =
        app.add_subcommand("lattice", "transport a lattice number system to Z^n");
    lattice_cmd->add_option("file", file, "ambient map JSON file (rational or complex entries)")
        ->required();
    lattice_cmd->add_option("--basis", basis_file, "lattice basis JSON file")->required();
    lattice_cmd->add_option("--convention", conv, "digit box convention: canonical, f, or u");
    lattice_cmd->add_option("--out", out, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (digits->parsed()) return cmd_digits(file, conv, allow_non_dilation, out);
        if (pseudo->parsed()) return cmd_pseudodigits(file, conv, include_points, out);
        if (rep->parsed()) return cmd_represent(file, vector_arg, decode_file, conv, out);
        if (check->parsed()) return cmd_check(file, conv, out);
        if (power->parsed()) return cmd_power(file, threshold, beta_max, out);
        if (atlas_cmd->parsed()) return cmd_atlas(file, n_max, conv, out);
        if (lattice_cmd->parsed()) return cmd_lattice(file, basis_file, conv, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
