// Command-line front end for the bicomplex linear algebra library.  Parsing,
// formatting and every computation are delegated to the library; this file
// only wires arguments and files to library calls and prints the results.
//
// Exit codes: 0 success, 1 domain errors (not invertible, no solution,
// dimension mismatch, singular basis), 2 parse and I/O errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcx/bcx.hpp"

namespace {

struct Options {
    bool cartesian = false;
    bool json = false;
    double tol_zero = bcx::default_zero_tolerance;
    double tol_pivot = bcx::default_pivot_tolerance;
    double tol_resid = bcx::default_residual_tolerance;

    bcx::TextForm form() const {
        return cartesian ? bcx::TextForm::cartesian : bcx::TextForm::idempotent;
    }
};

void emit(const std::string& text) { std::cout << text << "\n"; }
void emit(const bcx::Json& j) { std::cout << j.dump() << "\n"; }

void print_scalar(const bcx::BiComplex& x, const Options& opt) {
    if (opt.json)
        emit(bcx::to_json(x, opt.form()));
    else
        emit(bcx::to_string(x, opt.form()));
}

void print_vector(const bcx::BCVector& v, const Options& opt) {
    if (opt.json)
        emit(bcx::to_json(v, opt.form()));
    else
        emit(bcx::to_string(v, opt.form()));
}

void print_matrix(const bcx::BCMatrix& m, const Options& opt) {
    if (opt.json)
        emit(bcx::to_json(m));
    else
        emit(bcx::to_string(m, opt.form()));
}

void print_vector_list(const std::vector<bcx::BCVector>& vs, const Options& opt) {
    if (opt.json) {
        bcx::Json j = bcx::Json::array();
        for (const auto& v : vs) j.push_back(bcx::to_json(v, opt.form()));
        emit(j);
    } else {
        emit(bcx::to_string(vs, opt.form()));
    }
}

void print_map(const bcx::LinMap& t, const Options&) { emit(bcx::to_json(t)); }

/// A --rhs argument is either inline JSON (starting with '[') or a file path.
bcx::Json load_json_argument(const std::string& arg) {
    if (!arg.empty() && arg.front() == '[') return bcx::Json::parse(arg);
    return bcx::load_json_file(arg);
}

bcx::BCMatrix load_matrix(const std::string& path) {
    return bcx::matrix_from_json(bcx::load_json_file(path));
}

bcx::LinMap load_map(const std::string& path) {
    return bcx::linmap_from_json(bcx::load_json_file(path));
}

struct Error1 : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void usage_error(const std::string& message) {
    throw CLI::ValidationError(message);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicomplex linear algebra calculator (idempotent representation)"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--cartesian", opt.cartesian, "print scalars in cartesian form a+bi1+ci2+di1i2");
    app.add_flag("--json", opt.json, "print results as JSON");
    app.add_option("--tol-zero", opt.tol_zero, "modulus below which a component counts as zero");
    app.add_option("--tol-pivot", opt.tol_pivot, "relative pivot threshold for elimination")
        ->envname("BCX_TOL_PIVOT");
    app.add_option("--tol-resid", opt.tol_resid, "residual bound checked on solve results");

    std::vector<std::string> literals;
    std::vector<std::string> matrix_paths;
    std::vector<std::string> map_paths;
    std::string b1_path, b2_path, rhs_arg, vector_arg;

    const auto add_common = [&](CLI::App* sub, int max_literals) {
        sub->fallthrough();
        if (max_literals > 0)
            sub->add_option("literals", literals, "inline scalar literal(s)")
                ->expected(0, max_literals);
        sub->add_option("--matrix", matrix_paths, "bicomplex matrix JSON file")->expected(0, 2);
        sub->add_option("--map", map_paths, "linear map JSON file")->expected(0, 2);
        return sub;
    };

    auto* split_cmd = add_common(app.add_subcommand("split", "idempotent components"), 1);
    split_cmd->add_option("--vector", vector_arg, "vector JSON file or inline JSON");
    add_common(app.add_subcommand("join", "bicomplex scalar from two complex components"), 2);
    add_common(app.add_subcommand("mul", "product of two scalars or matrices"), 2);
    add_common(app.add_subcommand("add", "sum of two scalars or matrices"), 2);
    add_common(app.add_subcommand("inv", "inverse of a scalar, matrix or map"), 1);
    add_common(app.add_subcommand("det", "determinant of a bicomplex matrix"), 0);
    add_common(app.add_subcommand("rank", "rank of a matrix or map"), 0);
    add_common(app.add_subcommand("kernel", "kernel basis of a matrix or map"), 0);
    add_common(app.add_subcommand("image", "image basis of a matrix or map"), 0);
    auto* solve_cmd = add_common(app.add_subcommand("solve", "solve T(x) = rhs"), 0);
    solve_cmd->add_option("--rhs", rhs_arg, "right-hand side vector (file or inline JSON)");
    auto* repr_cmd = add_common(
        app.add_subcommand("repr", "matrix representation of a map relative to bases"), 0);
    repr_cmd->add_option("--b1", b1_path, "domain basis JSON file");
    repr_cmd->add_option("--b2", b2_path, "codomain basis JSON file");
    add_common(app.add_subcommand("compose", "composition S after T of two maps"), 0);
    add_common(app.add_subcommand("classify", "zero / zero-divisor / invertible"), 1);

    try {
        app.parse(argc, argv);

        if (app.got_subcommand("classify")) {
            if (literals.size() != 1) usage_error("classify needs one scalar literal");
            emit(bcx::to_string(bcx::classify(bcx::parse_bicomplex(literals[0]), opt.tol_zero)));
        } else if (app.got_subcommand("split")) {
            if (!matrix_paths.empty()) {
                emit(bcx::to_json(load_matrix(matrix_paths[0])));
            } else if (!vector_arg.empty()) {
                const auto [minus, plus] =
                    bcx::split(bcx::vector_from_json(load_json_argument(vector_arg)));
                bcx::Json jm = bcx::Json::array(), jp = bcx::Json::array();
                for (const auto& z : minus) jm.push_back(bcx::to_string(z));
                for (const auto& z : plus) jp.push_back(bcx::to_string(z));
                emit(bcx::Json{{"minus", jm}, {"plus", jp}});
            } else if (literals.size() == 1) {
                const auto [minus, plus] = bcx::split(bcx::parse_bicomplex(literals[0]));
                if (opt.json)
                    emit(bcx::Json{{"minus", bcx::to_string(minus)},
                                   {"plus", bcx::to_string(plus)}});
                else
                    emit(bcx::to_string(minus) + " " + bcx::to_string(plus));
            } else {
                usage_error("split needs a literal, --matrix or --vector");
            }
        } else if (app.got_subcommand("join")) {
            if (literals.size() != 2) usage_error("join needs two complex literals");
            print_scalar(bcx::join(bcx::parse_complex(literals[0]), bcx::parse_complex(literals[1])),
                         opt);
        } else if (app.got_subcommand("mul") || app.got_subcommand("add")) {
            const bool is_mul = app.got_subcommand("mul");
            if (matrix_paths.size() == 2) {
                const bcx::BCMatrix a = load_matrix(matrix_paths[0]);
                const bcx::BCMatrix b = load_matrix(matrix_paths[1]);
                print_matrix(is_mul ? a * b : a + b, opt);
            } else if (literals.size() == 2) {
                const bcx::BiComplex a = bcx::parse_bicomplex(literals[0]);
                const bcx::BiComplex b = bcx::parse_bicomplex(literals[1]);
                print_scalar(is_mul ? a * b : a + b, opt);
            } else {
                usage_error("mul/add need two scalar literals or two --matrix files");
            }
        } else if (app.got_subcommand("inv")) {
            if (!matrix_paths.empty()) {
                print_matrix(bcx::inverse(load_matrix(matrix_paths[0]), opt.tol_pivot), opt);
            } else if (!map_paths.empty()) {
                print_map(bcx::inverse(load_map(map_paths[0]), opt.tol_pivot), opt);
            } else if (literals.size() == 1) {
                print_scalar(bcx::inverse(bcx::parse_bicomplex(literals[0]), opt.tol_zero), opt);
            } else {
                usage_error("inv needs a scalar literal, --matrix or --map");
            }
        } else if (app.got_subcommand("det")) {
            if (matrix_paths.empty()) usage_error("det needs --matrix");
            print_scalar(bcx::det(load_matrix(matrix_paths[0]), opt.tol_pivot), opt);
        } else if (app.got_subcommand("rank")) {
            if (!matrix_paths.empty())
                emit(std::to_string(bcx::rank(load_matrix(matrix_paths[0]), opt.tol_pivot)));
            else if (!map_paths.empty())
                emit(std::to_string(bcx::rank(load_map(map_paths[0]), opt.tol_pivot)));
            else
                usage_error("rank needs --matrix or --map");
        } else if (app.got_subcommand("kernel") || app.got_subcommand("image")) {
            const bool want_kernel = app.got_subcommand("kernel");
            bcx::LinMap t;
            if (!map_paths.empty())
                t = load_map(map_paths[0]);
            else if (!matrix_paths.empty())
                t = bcx::to_linmap(load_matrix(matrix_paths[0]));
            else
                usage_error("kernel/image need --matrix or --map");
            print_vector_list(want_kernel ? bcx::kernel_basis(t, opt.tol_pivot)
                                          : bcx::image_basis(t, opt.tol_pivot),
                              opt);
        } else if (app.got_subcommand("solve")) {
            if (rhs_arg.empty()) usage_error("solve needs --rhs");
            bcx::LinMap t;
            if (!map_paths.empty())
                t = load_map(map_paths[0]);
            else if (!matrix_paths.empty())
                t = bcx::to_linmap(load_matrix(matrix_paths[0]));
            else
                usage_error("solve needs --matrix or --map");
            const bcx::BCVector rhs = bcx::vector_from_json(load_json_argument(rhs_arg));
            const bcx::BCVector x = bcx::solve(t, rhs, opt.tol_pivot);

            // guard the reported solution by the residual bound
            const auto residual = [&] {
                double worst = 0.0;
                const bcx::BCVector image = t.apply(x);
                for (std::size_t i = 0; i < rhs.size(); ++i) {
                    worst = std::max(worst, std::abs(image[i].minus() - rhs[i].minus()));
                    worst = std::max(worst, std::abs(image[i].plus() - rhs[i].plus()));
                }
                return worst;
            }();
            if (residual > opt.tol_resid)
                throw bcx::NoSolutionError("solution residual " + std::to_string(residual) +
                                               " exceeds the bound",
                                           bcx::Components::both);
            print_vector(x, opt);
        } else if (app.got_subcommand("repr")) {
            if (map_paths.empty() || b1_path.empty() || b2_path.empty())
                usage_error("repr needs --map, --b1 and --b2");
            const bcx::LinMap t = load_map(map_paths[0]);
            const bcx::Basis b1 = bcx::basis_from_json(bcx::load_json_file(b1_path), opt.tol_pivot);
            const bcx::Basis b2 = bcx::basis_from_json(bcx::load_json_file(b2_path), opt.tol_pivot);
            print_matrix(bcx::matrix_rep(t, b1, b2), opt);
        } else if (app.got_subcommand("compose")) {
            if (map_paths.size() != 2) usage_error("compose needs two --map files (outer, inner)");
            print_map(bcx::compose(load_map(map_paths[0]), load_map(map_paths[1])), opt);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << bcx::Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const bcx::ParseError& e) {
        std::cerr << bcx::Json{{"error", "parse"},
                               {"position", e.position()},
                               {"message", e.what()}}
                         .dump()
                  << "\n";
        return 2;
    } catch (const bcx::DimensionError& e) {
        std::cerr << bcx::Json{{"error", "dimension"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const bcx::NotInvertibleError& e) {
        bcx::Json j{{"error", "not-invertible"}, {"message", e.what()}};
        if (e.scalar_classification())
            j["classification"] = bcx::to_string(*e.scalar_classification());
        else
            j["components"] = bcx::to_string(e.failed_components());
        std::cerr << j.dump() << "\n";
        return 1;
    } catch (const bcx::NoSolutionError& e) {
        std::cerr << bcx::Json{{"error", "no-solution"},
                               {"components", bcx::to_string(e.failed_components())},
                               {"message", e.what()}}
                         .dump()
                  << "\n";
        return 1;
    } catch (const bcx::SingularBasisError& e) {
        std::cerr << bcx::Json{{"error", "singular-basis"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const bcx::Json::exception& e) {
        std::cerr << bcx::Json{{"error", "json"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << bcx::Json{{"error", "io"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
}
