#include "harmap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmap/catalog.hpp"
#include "harmap/classes.hpp"
#include "harmap/errors.hpp"
#include "harmap/geometry.hpp"
#include "harmap/render.hpp"
#include "harmap/verify.hpp"

namespace harmap {

namespace {

using nlohmann::json;

std::vector<cplx> parse_coeffs(const json& doc, const char* field, std::size_t order) {
    std::vector<cplx> out(order);
    if (!doc.contains(field))
        return out;
    const json& arr = doc.at(field);
    if (!arr.is_array())
        throw ArgumentError(std::string("field '") + field + "': expected an array of [re, im] pairs");
    if (arr.size() > order)
        throw ArgumentError(std::string("field '") + field + "': " + std::to_string(arr.size()) +
                            " coefficients exceed order " + std::to_string(order));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& p = arr[i];
        const std::string where = std::string(field) + "[" + std::to_string(i) + "]";
        if (p.is_number()) {
            out[i] = p.get<double>();
            continue;
        }
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw ArgumentError("field '" + where + "': expected [re, im] pair of numbers");
        out[i] = cplx(p[0].get<double>(), p[1].get<double>());
    }
    return out;
}

std::string json_coeffs(const AnalyticSeries& s) {
    std::string out = "[";
    for (std::size_t n = 1; n <= s.order(); ++n)
        // + 0.0 folds -0 into 0 so a reprint is byte-identical
        out += (n > 1 ? ", [" : "[") + format_number(s.coeff(n).real() + 0.0) + ", " +
               format_number(s.coeff(n).imag() + 0.0) + "]";
    return out + "]";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_radii(const std::string& list) {
    std::vector<double> radii;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double r = 0.0;
        try {
            r = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw ArgumentError("--radii: '" + item + "' is not a number");
        radii.push_back(r);
    }
    if (radii.empty())
        throw ArgumentError("--radii: empty list");
    return radii;
}

// N/r coupling: an explicit order below the requirement is refused for
// series-only maps; catalog maps evaluate through their closed forms.
std::size_t effective_order(std::size_t requested, double r_max) {
    return requested ? requested : required_order(r_max);
}

// Catalog maps are built at the coupled order; files keep their own order
// unless --order is given, so a short file is refused rather than padded.
HarmonicMap load_coupled(const std::string& source, std::size_t requested, double r_max) {
    const bool named = source == "log_map" || find_tag(source).has_value();
    return load_map(source, named ? effective_order(requested, r_max) : requested);
}

void require_coupling(const HarmonicMap& f, double r_max) {
    if (!f.has_closed_form() && f.order() < required_order(r_max))
        throw ArgumentError("order " + std::to_string(f.order()) + " is below the " +
                            std::to_string(required_order(r_max)) + " needed for r = " +
                            format_number(r_max));
}

struct Common {
    std::size_t order = 0;
};

void add_order(CLI::App* cmd, Common& c) {
    cmd->add_option("--order", c.order, "truncation order N")->check(CLI::Range(2, 100000));
}

} // namespace

HarmonicMap parse_map_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ArgumentError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ArgumentError("map document must be a JSON object");
    if (!doc.contains("h"))
        throw ArgumentError("field 'h' is required");
    std::size_t order = 0;
    if (doc.contains("order")) {
        const json& o = doc.at("order");
        if (!o.is_number_unsigned() || o.get<std::size_t>() < 1)
            throw ArgumentError("field 'order': expected a positive integer");
        order = o.get<std::size_t>();
    } else {
        order = doc.at("h").is_array() ? doc.at("h").size() : 0;
    }
    if (order < 1)
        throw ArgumentError("field 'order': map needs at least one coefficient");
    return HarmonicMap(AnalyticSeries(parse_coeffs(doc, "h", order)),
                       AnalyticSeries(parse_coeffs(doc, "g", order)));
}

std::string map_to_json(const HarmonicMap& f) {
    return "{\"order\": " + std::to_string(f.order()) + ",\n \"h\": " + json_coeffs(f.h()) +
           ",\n \"g\": " + json_coeffs(f.g()) + "}\n";
}

HarmonicMap load_map(const std::string& source, std::size_t order) {
    if (source == "log_map")
        return log_map(order ? order : kDefaultOrder);
    if (auto tag = find_tag(source))
        return make(*tag, order ? order : kDefaultOrder);
    HarmonicMap f = parse_map_json(read_file(source));
    return order && order != f.order() ? f.truncated(order) : f;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Harmonic mappings on the unit disk", "harmap"};
    app.require_subcommand(1);

    Common common;
    std::string input, class_name_arg, ref_map, a_spec, b_spec, sign = "plus", property, suite,
        radii_list, out_path, tag, figure_dir;
    double tol = 1e-4;
    std::uint64_t seed = 42;
    bool tilde = false;
    std::size_t samples = 512;

    auto* classify = app.add_subcommand("classify", "class membership with margin and witness");
    classify->add_option("--class", class_name_arg, "R_H0, W_H0, F_H0, U_H0, V_H0, S_R, R_H0_G, F_H0_G")
        ->required();
    classify->add_option("--ref-map", ref_map, "reference map G for the relative classes");
    classify->add_option("--input", input, "catalog tag or JSON map file")->required();
    add_order(classify, common);

    auto* conv = app.add_subcommand("convolve", "harmonic convolution, or phi ~* f with --tilde");
    conv->add_option("--a", a_spec, "first map (phi with --tilde)")->required();
    conv->add_option("--b", b_spec, "second map")->required();
    conv->add_flag("--tilde", tilde, "convolve the analytic part of a against both parts of b");
    add_order(conv, common);

    auto* alex = app.add_subcommand("alexander", "harmonic Alexander operator");
    alex->add_option("--sign", sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    alex->add_option("--input", input, "catalog tag or JSON map file")->required();
    add_order(alex, common);

    auto* radius = app.add_subcommand("radius", "radius of starlikeness, convexity or univalence");
    radius->add_option("--property", property, "starlike, convex or univalent")
        ->required()
        ->check(CLI::IsMember({"starlike", "convex", "univalent"}));
    radius->add_option("--input", input, "catalog tag or JSON map file")->required();
    radius->add_option("--tol", tol, "bisection tolerance");
    add_order(radius, common);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", suite, "suite id or 'all'")->required();
    ver->add_option("--seed", seed, "sampling seed");
    ver->add_option("--figures", figure_dir, "directory for the figure suites' SVG files");
    add_order(ver, common);

    auto* rend = app.add_subcommand("render", "SVG of circle images");
    rend->add_option("--input", input, "catalog tag or JSON map file")->required();
    rend->add_option("--radii", radii_list, "comma-separated radii in (0, 1)")->required();
    rend->add_option("--out", out_path, "output SVG path")->required();
    rend->add_option("--samples", samples, "points per curve (>= 256)");
    add_order(rend, common);

    auto* cat = app.add_subcommand("catalog", "print the coefficients of a named map");
    cat->add_option("--tag", tag, "catalog tag")->required();
    add_order(cat, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*classify) {
            const ClassKind kind = parse_class(class_name_arg);
            const bool coefficient = is_coefficient_class(kind);
            const HarmonicMap f =
                coefficient ? load_map(input, common.order) : load_coupled(input, common.order, 0.99);
            if (!coefficient)
                require_coupling(f, 0.99);
            std::optional<HarmonicMap> G;
            if (!ref_map.empty())
                G = load_coupled(ref_map, common.order, 0.99);
            const ClassId c(kind, G);
            const SamplingGrid grid = is_relative(kind) ? relative_grid() : SamplingGrid::standard();
            const Membership m = membership(f, c, grid);
            out << class_name(kind) << "\t" << status_name(m.status) << "\tmargin " << format_number(m.margin);
            if (m.witness_point)
                out << "\twitness z = " << format_number(m.witness_point->real()) << " "
                    << format_number(m.witness_point->imag()) << "i";
            else
                out << "\twitness n = " << m.witness_index;
            out << "\n";
            return m.member() ? kExitOk : kExitNegative;
        }
        if (*conv) {
            const HarmonicMap a = load_map(a_spec, common.order);
            const HarmonicMap b = load_map(b_spec, common.order);
            out << map_to_json(tilde ? tilde_convolve(a.h(), b) : harmonic_convolve(a, b));
            return kExitOk;
        }
        if (*alex) {
            const HarmonicMap f = load_map(input, common.order);
            out << map_to_json(sign == "plus" ? alexander_plus(f) : alexander_minus(f));
            return kExitOk;
        }
        if (*radius) {
            const HarmonicMap f = load_coupled(input, common.order, 0.99);
            require_coupling(f, 0.99);
            const RadiusEstimate e = radius_estimate(f, parse_functional(property), tol);
            out << property << "\tradius " << format_number(e.value) << "\tbracket "
                << format_number(e.lo) << " " << format_number(e.hi) << "\ttol " << format_number(e.tol)
                << "\n";
            return kExitOk;
        }
        if (*ver) {
            std::vector<std::string_view> ids;
            if (suite == "all")
                ids = suite_ids();
            else
                ids.push_back(suite);
            bool ok = true;
            for (std::string_view id : ids) {
                SuiteOptions opts{seed, figure_dir};
                const SuiteReport r = run_suite(id, opts);
                out << r.to_text();
                out.flush();
                ok = ok && r.passed();
            }
            return ok ? kExitOk : kExitNegative;
        }
        if (*rend) {
            const std::vector<double> radii = parse_radii(radii_list);
            const double r_max = *std::max_element(radii.begin(), radii.end());
            const HarmonicMap f = load_coupled(input, common.order, r_max);
            require_coupling(f, r_max);
            render_image(f, radii, samples, out_path);
            out << "wrote " << out_path << "\n";
            return kExitOk;
        }
        if (*cat) {
            const std::size_t order = common.order ? common.order : kDefaultOrder;
            out << map_to_json(make(parse_tag(tag), order));
            return kExitOk;
        }
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    }
    return kExitUsage;
}

} // namespace harmap
