// alleemem: experiment driver for the allee-effect plasticity library.
//
//   alleemem <subcommand> [--config <file>] [--set key=value ...] --out <dir> [--plots]
//
// Subcommands: simulate, fixed-points, hopf-scan, sweep, overlap, sensitivity,
// retrieve, noise-sweep. Every CSV gets a <name>.meta sidecar echoing the full
// resolved configuration; a .meta file is itself a valid --config, and re-running
// from it reproduces the CSV byte-for-byte.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alleemem/assoc.hpp"
#include "alleemem/config.hpp"
#include "alleemem/csv.hpp"
#include "alleemem/fixed_points.hpp"
#include "alleemem/hopf.hpp"
#include "alleemem/integrate.hpp"
#include "alleemem/overlap.hpp"
#include "alleemem/parallel.hpp"
#include "alleemem/region.hpp"
#include "alleemem/rng.hpp"
#include "alleemem/sweep.hpp"
#include "alleemem/version.hpp"

namespace {

using namespace alleemem;
namespace fs = std::filesystem;

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_dir;
    bool plots = false;
};

Config load_config(const CommonOpts& o) {
    Config c = o.config_path.empty() ? Config::from_text("") : Config::from_file(o.config_path);
    for (const auto& kv : o.sets) c.set_override(kv);
    return c;
}

std::string fmt(double v) { return format_double(v); }
std::string fmt_k(double k) { return std::isinf(k) ? "inf" : format_double(k); }
std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string join_doubles(const std::vector<double>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += fmt(vs[i]);
    }
    return s;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// ---------------------------------------------------------------- model keys

const std::vector<std::string> kModelKeys = {"A",     "K",      "u",      "m",
                                             "tau_v", "tau_w",  "gain",   "gain_a",
                                             "gain_b", "gain_c", "gain_d", "plots"};

ModelParams model_from(const Config& c) {
    ModelParams p;
    p.A = c.get_double("A", 0.0);
    p.K = c.get_k("K", ModelParams::unbounded());
    p.u = c.get_double("u", 1.0);
    p.m = c.get_double("m", 1.0);
    p.tau_v = c.get_double("tau_v", 1.0);
    p.tau_w = c.get_double("tau_w", 1.0);
    require(p.A >= 0.0, "A must be >= 0");
    require(p.K > 0.0, "K must be > 0 (or inf/unbounded)");
    require(p.u >= 0.0, "u must be >= 0");
    require(p.tau_v > 0.0 && p.tau_w > 0.0, "tau_v, tau_w must be > 0");
    return p;
}

GainSpec gain_from(const Config& c) {
    const std::string g = c.get_string("gain", "sigmoid");
    if (g == "sigmoid") return GainSpec::sigmoid();
    if (g == "soboleva")
        return GainSpec::soboleva(c.get_double("gain_a", 1.0), c.get_double("gain_b", 1.0),
                                  c.get_double("gain_c", 1.0), c.get_double("gain_d", 1.0));
    throw std::invalid_argument("gain must be sigmoid or soboleva");
}

void echo_model(std::map<std::string, std::string>& kv, const Config& c) {
    const ModelParams p = model_from(c);
    kv["A"] = fmt(p.A);
    kv["K"] = fmt_k(p.K);
    kv["u"] = fmt(p.u);
    kv["m"] = fmt(p.m);
    kv["tau_v"] = fmt(p.tau_v);
    kv["tau_w"] = fmt(p.tau_w);
    kv["gain"] = c.get_string("gain", "sigmoid");
    kv["gain_a"] = fmt(c.get_double("gain_a", 1.0));
    kv["gain_b"] = fmt(c.get_double("gain_b", 1.0));
    kv["gain_c"] = fmt(c.get_double("gain_c", 1.0));
    kv["gain_d"] = fmt(c.get_double("gain_d", 1.0));
}

// ----------------------------------------------------------------- svg plots

struct Series {
    std::string name;
    std::vector<double> x, y;
};

std::string fmt_px(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

std::string svg_line_plot(const std::string& title, const std::string& xlabel,
                          const std::string& ylabel, const std::vector<Series>& series) {
    double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
    bool first = true;
    for (const auto& s : series)
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (first) {
                x_lo = x_hi = s.x[i];
                y_lo = y_hi = s.y[i];
                first = false;
            }
            x_lo = std::min(x_lo, s.x[i]);
            x_hi = std::max(x_hi, s.x[i]);
            y_lo = std::min(y_lo, s.y[i]);
            y_hi = std::max(y_hi, s.y[i]);
        }
    if (x_hi == x_lo) { x_lo -= 1; x_hi += 1; }
    if (y_hi == y_lo) { y_lo -= 1; y_hi += 1; }
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;
    const double L = 70, R = 780, T = 46, B = 450;
    auto px = [&](double x) { return L + (R - L) * (x - x_lo) / (x_hi - x_lo); };
    auto py = [&](double y) { return B - (B - T) * (y - y_lo) / (y_hi - y_lo); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
           "font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
    svg += "<text x=\"400\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" + title +
           "</text>\n";
    for (int t = 0; t <= 4; ++t) {
        const double xv = x_lo + (x_hi - x_lo) * t / 4;
        const double yv = y_lo + (y_hi - y_lo) * t / 4;
        svg += "<line x1=\"" + fmt_px(px(xv)) + "\" y1=\"" + fmt_px(B) + "\" x2=\"" +
               fmt_px(px(xv)) + "\" y2=\"" + fmt_px(B + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt_px(px(xv)) + "\" y=\"" + fmt_px(B + 18) +
               "\" text-anchor=\"middle\">" + fmt_px(xv) + "</text>\n";
        svg += "<line x1=\"" + fmt_px(L - 5) + "\" y1=\"" + fmt_px(py(yv)) + "\" x2=\"" +
               fmt_px(L) + "\" y2=\"" + fmt_px(py(yv)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt_px(L - 8) + "\" y=\"" + fmt_px(py(yv) + 4) +
               "\" text-anchor=\"end\">" + fmt_px(yv) + "</text>\n";
    }
    svg += "<line x1=\"" + fmt_px(L) + "\" y1=\"" + fmt_px(T) + "\" x2=\"" + fmt_px(L) +
           "\" y2=\"" + fmt_px(B) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt_px(L) + "\" y1=\"" + fmt_px(B) + "\" x2=\"" + fmt_px(R) +
           "\" y2=\"" + fmt_px(B) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_px((L + R) / 2) + "\" y=\"488\" text-anchor=\"middle\">" +
           xlabel + "</text>\n";
    svg += "<text x=\"16\" y=\"" + fmt_px((T + B) / 2) + "\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 " + fmt_px((T + B) / 2) + ")\">" + ylabel + "</text>\n";
    for (size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        std::string pts;
        for (size_t i = 0; i < series[s].x.size(); ++i) {
            if (i) pts += ' ';
            pts += fmt_px(px(series[s].x[i])) + "," + fmt_px(py(series[s].y[i]));
        }
        svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.5\"/>\n";
        const double lx = L + 10 + 130.0 * static_cast<double>(s % 5);
        const double ly = T - 14 + 14.0 * static_cast<double>(s / 5);
        svg += "<rect x=\"" + fmt_px(lx) + "\" y=\"" + fmt_px(ly - 8) +
               "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/>\n";
        svg += "<text x=\"" + fmt_px(lx + 14) + "\" y=\"" + fmt_px(ly + 1) + "\">" +
               series[s].name + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string svg_region(const RegionScan& scan, const std::string& title) {
    const double L = 70, R = 770, T = 46, B = 450;
    auto px = [&](double x) { return L + (R - L) * (x - scan.x_min) / (scan.x_max - scan.x_min); };
    auto py = [&](double y) { return B - (B - T) * (y - scan.y_min) / (scan.y_max - scan.y_min); };
    const double cw = (R - L) / scan.nx, ch = (B - T) / scan.ny;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
           "font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
    svg += "<text x=\"400\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" + title +
           "</text>\n";
    auto cells = [&](const std::vector<std::pair<int, int>>& cs, const char* color) {
        for (const auto& [ix, iy] : cs) {
            const double x0 = px(scan.cell_x(ix)) - cw / 2;
            const double y0 = py(scan.cell_y(iy)) - ch / 2;
            svg += "<rect x=\"" + fmt_px(x0) + "\" y=\"" + fmt_px(y0) + "\" width=\"" +
                   fmt_px(cw) + "\" height=\"" + fmt_px(ch) + "\" fill=\"" + color + "\"/>\n";
        }
    };
    cells(scan.hopf_cells, "#9ecae1");
    cells(scan.band_cells, "#d62728");
    cells(scan.tb_cells, "#000000");
    svg += "<rect x=\"" + fmt_px(L) + "\" y=\"" + fmt_px(T) + "\" width=\"" + fmt_px(R - L) +
           "\" height=\"" + fmt_px(B - T) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double xv = scan.x_min + (scan.x_max - scan.x_min) * t / 4;
        const double yv = scan.y_min + (scan.y_max - scan.y_min) * t / 4;
        svg += "<text x=\"" + fmt_px(px(xv)) + "\" y=\"" + fmt_px(B + 18) +
               "\" text-anchor=\"middle\">" + fmt_px(xv) + "</text>\n";
        svg += "<text x=\"" + fmt_px(L - 8) + "\" y=\"" + fmt_px(py(yv) + 4) +
               "\" text-anchor=\"end\">" + fmt_px(yv) + "</text>\n";
    }
    svg += "<text x=\"420\" y=\"488\" text-anchor=\"middle\">x</text>\n";
    svg += "<text x=\"16\" y=\"248\" text-anchor=\"middle\" transform=\"rotate(-90 16 248)\">y"
           "</text>\n";
    svg += "</svg>\n";
    return svg;
}

void write_text(const fs::path& path, const std::string& text) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open " + path.string());
    const size_t n = std::fwrite(text.data(), 1, text.size(), f);
    const bool ok = n == text.size() && std::fclose(f) == 0;
    if (!ok) throw std::runtime_error("short write to " + path.string());
}

// -------------------------------------------------------------- subcommands

int cmd_simulate(const CommonOpts& opts) {
    const Config c = load_config(opts);
    std::vector<std::string> allowed = kModelKeys;
    for (const char* k : {"x0", "y0", "t_end", "dt"}) allowed.push_back(k);
    c.require_known(allowed);

    const ModelParams p = model_from(c);
    const GainSpec g = gain_from(c);
    const double x0 = c.get_double("x0", 0.5);
    const double y0 = c.get_double("y0", 0.5);
    const double t_end = c.get_double("t_end", 50.0);
    const double dt = c.get_double("dt", 0.01);
    require(y0 > 0.0, "y0 must be > 0");
    require(t_end >= 0.0, "t_end must be >= 0");
    require(dt > 0.0, "dt must be > 0");
    const bool plots = c.get_bool("plots", false) || opts.plots;

    const Trajectory tr = integrate(p, g, NeuronState{x0, y0}, t_end, dt);

    CsvWriter csv({"t", "x", "y", "extinct"});
    for (size_t i = 0; i < tr.times.size(); ++i) {
        const bool ex = tr.extinct_at && tr.times[i] >= *tr.extinct_at;
        csv.add_row({fmt(tr.times[i]), fmt(tr.states[i].x), fmt(tr.states[i].y),
                     ex ? "1" : "0"});
    }
    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    csv.write_file((out / "simulate.csv").string());

    std::map<std::string, std::string> kv;
    echo_model(kv, c);
    kv["x0"] = fmt(x0);
    kv["y0"] = fmt(y0);
    kv["t_end"] = fmt(t_end);
    kv["dt"] = fmt(dt);
    kv["plots"] = fmt_bool(plots);
    write_meta((out / "simulate.meta").string(), "simulate", kv);

    if (plots) {
        Series sx{"x", tr.times, {}}, sy{"y", tr.times, {}};
        for (const auto& s : tr.states) {
            sx.y.push_back(s.x);
            sy.y.push_back(s.y);
        }
        write_text(out / "simulate.svg", svg_line_plot("trajectory", "t", "state", {sx, sy}));
    }
    std::cout << "wrote " << (out / "simulate.csv").string() << " ("
              << tr.times.size() << " rows)\n";
    return 0;
}

int cmd_fixed_points(const CommonOpts& opts) {
    const Config c = load_config(opts);
    c.require_known(kModelKeys);
    const ModelParams p = model_from(c);
    const GainSpec g = gain_from(c);
    const bool plots = c.get_bool("plots", false) || opts.plots;

    const auto fps = solve_fixed_points(p, g);
    std::string t1_case = "undefined_A0";
    if (p.A > 0.0) {
        try {
            t1_case = theorem1_predicate(p).case_label;
        } catch (const std::exception&) {
            t1_case = "no_allee_root";
        }
    }

    CsvWriter csv({"branch", "x", "y", "eig1_re", "eig1_im", "eig2_re", "eig2_im",
                   "stability", "theorem1_case"});
    for (const auto& r : fps)
        csv.add_row({to_string(r.branch), fmt(r.point.x), fmt(r.point.y), fmt(r.eig1.real()),
                     fmt(r.eig1.imag()), fmt(r.eig2.real()), fmt(r.eig2.imag()),
                     to_string(r.stability), t1_case});

    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    csv.write_file((out / "fixed_points.csv").string());

    std::map<std::string, std::string> kv;
    echo_model(kv, c);
    kv["plots"] = fmt_bool(plots);
    write_meta((out / "fixed_points.meta").string(), "fixed-points", kv);
    std::cout << "wrote " << (out / "fixed_points.csv").string() << " (" << fps.size()
              << " fixed points)\n";
    return 0;
}

std::string sanitize_case(const std::string& label) {
    if (label == "y*=A impossible") return "ystar_eq_A_impossible";
    if (label == "y*<A window") return "ystar_lt_A_window";
    if (label == "y*>A tail") return "ystar_gt_A_tail";
    if (label == "discriminant-negative") return "discriminant_negative";
    return "unknown";
}

int cmd_hopf_scan(const CommonOpts& opts) {
    const Config c = load_config(opts);
    std::vector<std::string> allowed = kModelKeys;
    for (const char* k : {"x_min", "x_max", "y_min", "y_max", "nx", "ny"})
        allowed.push_back(k);
    c.require_known(allowed);

    const ModelParams p = model_from(c);
    const GainSpec g = gain_from(c);
    const double x_min = c.get_double("x_min", 0.01), x_max = c.get_double("x_max", 1.0);
    const double y_min = c.get_double("y_min", 0.01), y_max = c.get_double("y_max", 3.0);
    const int nx = static_cast<int>(c.get_int("nx", 400));
    const int ny = static_cast<int>(c.get_int("ny", 400));
    require(y_min > 0.0, "y_min must be > 0");
    require(x_min < x_max && y_min < y_max, "scan ranges must be nonempty");
    require(nx >= 1 && ny >= 1, "nx, ny must be >= 1");
    const bool plots = c.get_bool("plots", false) || opts.plots;

    const RegionScan scan = scan_region(p, g, x_min, x_max, y_min, y_max, nx, ny);

    // cell table: only cells carrying a flag (the full lattice would be huge)
    std::vector<char> in_band(scan.det_sign.size(), 0), in_hopf(scan.det_sign.size(), 0),
        in_tb(scan.det_sign.size(), 0);
    auto idx = [&](int ix, int iy) { return static_cast<size_t>(ix) * ny + iy; };
    for (const auto& [ix, iy] : scan.band_cells) in_band[idx(ix, iy)] = 1;
    for (const auto& [ix, iy] : scan.hopf_cells) in_hopf[idx(ix, iy)] = 1;
    for (const auto& [ix, iy] : scan.tb_cells) in_tb[idx(ix, iy)] = 1;

    CsvWriter csv({"ix", "iy", "x", "y", "det_sign", "tr_sign", "band", "hopf", "tb"});
    for (int ix = 0; ix < nx; ++ix)
        for (int iy = 0; iy < ny; ++iy) {
            const size_t k = idx(ix, iy);
            if (!in_band[k] && !in_hopf[k] && !in_tb[k]) continue;
            csv.add_row({std::to_string(ix), std::to_string(iy), fmt(scan.cell_x(ix)),
                         fmt(scan.cell_y(iy)), std::to_string(scan.det_sign[k]),
                         std::to_string(scan.tr_sign[k]), in_band[k] ? "1" : "0",
                         in_hopf[k] ? "1" : "0", in_tb[k] ? "1" : "0"});
        }

    CsvWriter verdicts({"branch", "x_star", "y_star", "lambda", "beta", "p2", "hopf", "case"});
    try {
        for (const auto& v : hopf_verdict(p, g))
            verdicts.add_row({to_string(v.branch), fmt(v.x_star), fmt(v.y_star),
                              fmt(v.lambda), fmt(v.beta),
                              v.p2 ? fmt(*v.p2) : "nan", v.hopf ? "1" : "0",
                              sanitize_case(v.case_label)});
    } catch (const std::runtime_error&) {
        // no fixed points at these parameters: verdict table stays empty
    }

    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    csv.write_file((out / "hopf_scan.csv").string());
    verdicts.write_file((out / "hopf_verdicts.csv").string());

    std::map<std::string, std::string> kv;
    echo_model(kv, c);
    kv["x_min"] = fmt(x_min);
    kv["x_max"] = fmt(x_max);
    kv["y_min"] = fmt(y_min);
    kv["y_max"] = fmt(y_max);
    kv["nx"] = std::to_string(nx);
    kv["ny"] = std::to_string(ny);
    kv["plots"] = fmt_bool(plots);
    write_meta((out / "hopf_scan.meta").string(), "hopf-scan", kv);
    write_meta((out / "hopf_verdicts.meta").string(), "hopf-scan", kv);

    if (plots) write_text(out / "hopf_scan.svg", svg_region(scan, "hopf region scan"));

    double cx = 0, cy = 0;
    if (scan.hopf_centroid(cx, cy))
        std::cout << "hopf cells: " << scan.hopf_cells.size() << ", centroid (" << fmt(cx)
                  << ", " << fmt(cy) << ")\n";
    else
        std::cout << "hopf cells: none\n";
    return 0;
}

int cmd_sweep(const CommonOpts& opts) {
    const Config c = load_config(opts);
    std::vector<std::string> allowed = kModelKeys;
    for (const char* k : {"vary", "values", "lo", "hi", "n"}) allowed.push_back(k);
    c.require_known(allowed);

    const ModelParams p = model_from(c);
    const GainSpec g = gain_from(c);
    const std::string vary = c.get_string("vary");
    require(vary == "A" || vary == "K" || vary == "u" || vary == "m",
            "vary must be one of A, K, u, m");
    std::vector<double> values;
    if (c.has("values")) {
        values = c.get_double_list("values");
    } else {
        const double lo = c.get_double("lo"), hi = c.get_double("hi");
        const auto n = c.get_int("n");
        require(n >= 2 && hi > lo, "sweep needs n >= 2 and hi > lo");
        for (std::int64_t i = 0; i < n; ++i)
            values.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                      static_cast<double>(n - 1));
    }
    std::sort(values.begin(), values.end());
    require(values.size() >= 2, "sweep needs at least 2 values");
    if (vary == "A") require(values.front() >= 0.0, "A values must be >= 0");
    if (vary == "K" || vary == "u") require(values.front() > 0.0, vary + " values must be > 0");
    const bool plots = c.get_bool("plots", false) || opts.plots;

    const auto events = parameter_sweep(p, g, vary, values);

    auto fps_cell = [](const std::vector<FixedPointReport>& fps) {
        std::string s;
        for (size_t i = 0; i < fps.size(); ++i) {
            if (i) s += ';';
            s += std::string(to_string(fps[i].branch)) + ":" + fmt(fps[i].point.x) + ":" +
                 fmt(fps[i].point.y) + ":" + to_string(fps[i].stability);
        }
        return s.empty() ? std::string("none") : s;
    };

    CsvWriter csv({"parameter", "value", "kind", "before", "after"});
    for (const auto& ev : events)
        csv.add_row({ev.parameter, fmt(ev.value), to_string(ev.kind), fps_cell(ev.before),
                     fps_cell(ev.after)});

    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    csv.write_file((out / "sweep.csv").string());

    std::map<std::string, std::string> kv;
    echo_model(kv, c);
    kv["vary"] = vary;
    kv["values"] = join_doubles(values);
    kv["plots"] = fmt_bool(plots);
    write_meta((out / "sweep.meta").string(), "sweep", kv);
    std::cout << "wrote " << (out / "sweep.csv").string() << " (" << events.size()
              << " events)\n";
    return 0;
}

std::vector<NeuronState> parse_initials(const std::string& s) {
    std::vector<NeuronState> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const size_t colon = tok.find(':');
        require(colon != std::string::npos, "initials: expected x:y pairs, got " + tok);
        out.push_back(NeuronState{std::stod(tok.substr(0, colon)),
                                  std::stod(tok.substr(colon + 1))});
    }
    require(!out.empty(), "initials must be nonempty");
    return out;
}

int cmd_overlap(const CommonOpts& opts) {
    const Config c = load_config(opts);
    std::vector<std::string> allowed = kModelKeys;
    for (const char* k : {"initials", "t_end", "dt", "alpha"}) allowed.push_back(k);
    c.require_known(allowed);

    const ModelParams p = model_from(c);
    const GainSpec g = gain_from(c);
    const auto initials = parse_initials(c.get_string("initials"));
    const double t_end = c.get_double("t_end", 50.0);
    const double dt = c.get_double("dt", 0.01);
    const double alpha = c.get_double("alpha", 1.0);  // echoed for completeness; not used
    require(t_end >= 0.0 && dt > 0.0, "t_end >= 0 and dt > 0 required");
    for (const auto& s0 : initials) require(s0.y > 0.0, "every initial needs y0 > 0");
    const bool plots = c.get_bool("plots", false) || opts.plots;

    const auto series = overlap_experiment(p, g, initials, t_end, dt);

    std::vector<std::string> header = {"t"};
    for (size_t i = 0; i < series.size(); ++i) header.push_back("ov" + std::to_string(i + 1));
    CsvWriter csv(header);
    for (size_t k = 0; k < series[0].times.size(); ++k) {
        std::vector<std::string> row = {fmt(series[0].times[k])};
        for (const auto& s : series) row.push_back(fmt(s.overlap[k]));
        csv.add_row(row);
    }

    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    csv.write_file((out / "overlap.csv").string());

    std::map<std::string, std::string> kv;
    echo_model(kv, c);
    std::string init_s;
    for (size_t i = 0; i < initials.size(); ++i) {
        if (i) init_s += ',';
        init_s += fmt(initials[i].x) + ":" + fmt(initials[i].y);
    }
    kv["initials"] = init_s;
    kv["t_end"] = fmt(t_end);
    kv["dt"] = fmt(dt);
    kv["alpha"] = fmt(alpha);
    kv["plots"] = fmt_bool(plots);
    write_meta((out / "overlap.meta").string(), "overlap", kv);

    if (plots) {
        std::vector<Series> ss;
        for (size_t i = 0; i < series.size(); ++i)
            ss.push_back(Series{"ov" + std::to_string(i + 1), series[i].times,
                                series[i].overlap});
        write_text(out / "overlap.svg", svg_line_plot("overlap", "t", "overlap", ss));
    }
    std::cout << "target (" << fmt(series[0].target.point.x) << ", "
              << fmt(series[0].target.point.y) << "), "
              << to_string(series[0].target.stability) << "\n";
    return 0;
}

int cmd_sensitivity(const CommonOpts& opts) {
    const Config c = load_config(opts);
    std::vector<std::string> allowed = {"vary", "lo",    "hi",    "n",     "x0",
                                        "y0",   "t_end", "dt",    "gain",  "gain_a",
                                        "gain_b", "gain_c", "gain_d", "plots"};
    c.require_known(allowed);

    const GainSpec g = gain_from(c);
    const std::string vary = c.get_string("vary");
    require(vary == "A" || vary == "K" || vary == "m" || vary == "u",
            "vary must be one of A, K, m, u");
    const double lo = c.get_double("lo"), hi = c.get_double("hi");
    const int n = static_cast<int>(c.get_int("n", 8));
    const double x0 = c.get_double("x0", 0.5), y0 = c.get_double("y0", 0.5);
    const double t_end = c.get_double("t_end", 50.0), dt = c.get_double("dt", 0.01);
    require(n >= 1, "n must be >= 1");
    require(hi >= lo, "hi must be >= lo");
    require(y0 > 0.0, "y0 must be > 0");
    require(t_end >= 0.0 && dt > 0.0, "t_end >= 0 and dt > 0 required");
    if (vary == "A" || vary == "u") require(lo >= 0.0, vary + " values must be >= 0");
    if (vary == "K") require(lo > 0.0, "K values must be > 0");
    const bool plots = c.get_bool("plots", false) || opts.plots;

    const auto res = sensitivity_sweep(g, vary, lo, hi, n, NeuronState{x0, y0}, t_end, dt);

    std::vector<std::string> header = {"t"};
    for (size_t i = 0; i < res.values.size(); ++i) {
        header.push_back("x_" + std::to_string(i + 1));
        header.push_back("y_" + std::to_string(i + 1));
    }
    CsvWriter csv(header);
    for (size_t k = 0; k < res.runs[0].times.size(); ++k) {
        std::vector<std::string> row = {fmt(res.runs[0].times[k])};
        for (const auto& run : res.runs) {
            row.push_back(fmt(run.states[k].x));
            row.push_back(fmt(run.states[k].y));
        }
        csv.add_row(row);
    }

    CsvWriter summary({"value", "extinct_at", "final_x", "final_y"});
    for (size_t i = 0; i < res.values.size(); ++i) {
        const auto& run = res.runs[i];
        summary.add_row({fmt(res.values[i]),
                         run.extinct_at ? fmt(*run.extinct_at) : "-1",
                         fmt(run.states.back().x), fmt(run.states.back().y)});
    }

    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    csv.write_file((out / "sensitivity.csv").string());
    summary.write_file((out / "sensitivity_summary.csv").string());

    std::map<std::string, std::string> kv;
    kv["vary"] = vary;
    kv["lo"] = fmt(lo);
    kv["hi"] = fmt(hi);
    kv["n"] = std::to_string(n);
    kv["x0"] = fmt(x0);
    kv["y0"] = fmt(y0);
    kv["t_end"] = fmt(t_end);
    kv["dt"] = fmt(dt);
    kv["gain"] = c.get_string("gain", "sigmoid");
    kv["gain_a"] = fmt(c.get_double("gain_a", 1.0));
    kv["gain_b"] = fmt(c.get_double("gain_b", 1.0));
    kv["gain_c"] = fmt(c.get_double("gain_c", 1.0));
    kv["gain_d"] = fmt(c.get_double("gain_d", 1.0));
    kv["plots"] = fmt_bool(plots);
    write_meta((out / "sensitivity.meta").string(), "sensitivity", kv);
    write_meta((out / "sensitivity_summary.meta").string(), "sensitivity", kv);

    if (plots) {
        std::vector<Series> ss;
        for (size_t i = 0; i < res.runs.size(); ++i) {
            Series sy{vary + "=" + fmt(res.values[i]), res.runs[i].times, {}};
            for (const auto& s : res.runs[i].states) sy.y.push_back(s.y);
            ss.push_back(std::move(sy));
        }
        write_text(out / "sensitivity.svg", svg_line_plot("sensitivity: " + vary, "t", "y", ss));
    }
    std::cout << "wrote " << (out / "sensitivity.csv").string() << " (" << res.values.size()
              << " runs)\n";
    return 0;
}

// ------------------------------------------------------------ assoc commands

const std::vector<std::string> kAssocKeys = {
    "L",        "N_u",      "N_v",    "P",         "eta",    "A",      "K",
    "B_plus",   "B_minus",  "tau_plus", "tau_minus", "gamma", "B",      "delta_t",
    "kappa",    "lambda",   "tau1",   "tau2",      "seeds",  "epochs", "max_iters",
    "plots"};

NetworkShape shape_from(const Config& c) {
    NetworkShape s;
    s.L = static_cast<int>(c.get_int("L", 5));
    s.N_u = static_cast<int>(c.get_int("N_u", 25));
    s.N_v = static_cast<int>(c.get_int("N_v", 25));
    require(s.L >= 1 && s.N_u >= 1 && s.N_v >= 1, "L, N_u, N_v must be >= 1");
    return s;
}

LearningRule rule_from(const Config& c, RuleKind kind) {
    LearningRule r;
    r.kind = kind;
    r.eta = c.get_double("eta", 0.01);
    r.B_plus = c.get_double("B_plus", 0.01);
    r.B_minus = c.get_double("B_minus", 0.012);
    r.tau_plus = c.get_double("tau_plus", 20.0);
    r.tau_minus = c.get_double("tau_minus", 20.0);
    r.gamma = c.get_double("gamma", 0.7);
    r.B = c.get_double("B", 0.01);
    r.delta_t = c.get_double("delta_t", 0.1);
    r.kappa = c.get_double("kappa", 0.0);
    r.lambda_trace = c.get_double("lambda", 0.0);
    r.tau1 = c.get_double("tau1", 0.6);
    r.tau2 = c.get_double("tau2", 0.6);
    require(r.eta >= 0.0, "eta must be >= 0");
    require(r.delta_t >= 0.0, "delta_t must be >= 0");
    // kind-specific A/K per the rule invariants
    switch (kind) {
        case RuleKind::Hebbian:
            r.A = 0.0;
            r.K = ModelParams::unbounded();
            break;
        case RuleKind::Oja:
            r.A = 0.0;
            r.K = c.get_k("K", 5.0);
            break;
        case RuleKind::Allee:
        case RuleKind::AlleeTemporal:
            r.A = c.get_double("A", 1.0);
            r.K = c.get_k("K", 5.0);
            require(r.A >= 0.0, "A must be >= 0");
            break;
        default:
            break;  // stdp kinds ignore A/K
    }
    if (!std::isinf(r.K)) require(r.K > 0.0, "K must be > 0 (or inf/unbounded)");
    return r;
}

std::vector<std::uint64_t> seeds_from(const Config& c) {
    const std::string s = c.get_string("seeds", "1");
    std::vector<std::uint64_t> seeds;
    if (s.find(',') != std::string::npos) {
        for (double v : c.get_double_list("seeds"))
            seeds.push_back(static_cast<std::uint64_t>(v));
    } else {
        const auto n = std::stoll(s);
        require(n >= 1, "seeds: count must be >= 1");
        for (std::int64_t i = 1; i <= n; ++i) seeds.push_back(static_cast<std::uint64_t>(i));
    }
    return seeds;
}

std::string join_seeds(const std::vector<std::uint64_t>& seeds) {
    std::string s;
    for (size_t i = 0; i < seeds.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(seeds[i]);
    }
    return s;
}

void echo_assoc(std::map<std::string, std::string>& kv, const Config& c,
                const NetworkShape& shape, const std::vector<std::uint64_t>& seeds) {
    kv["L"] = std::to_string(shape.L);
    kv["N_u"] = std::to_string(shape.N_u);
    kv["N_v"] = std::to_string(shape.N_v);
    kv["eta"] = fmt(c.get_double("eta", 0.01));
    kv["A"] = fmt(c.get_double("A", 1.0));
    kv["K"] = fmt_k(c.get_k("K", 5.0));
    kv["B_plus"] = fmt(c.get_double("B_plus", 0.01));
    kv["B_minus"] = fmt(c.get_double("B_minus", 0.012));
    kv["tau_plus"] = fmt(c.get_double("tau_plus", 20.0));
    kv["tau_minus"] = fmt(c.get_double("tau_minus", 20.0));
    kv["gamma"] = fmt(c.get_double("gamma", 0.7));
    kv["B"] = fmt(c.get_double("B", 0.01));
    kv["delta_t"] = fmt(c.get_double("delta_t", 0.1));
    kv["kappa"] = fmt(c.get_double("kappa", 0.0));
    kv["lambda"] = fmt(c.get_double("lambda", 0.0));
    kv["tau1"] = fmt(c.get_double("tau1", 0.6));
    kv["tau2"] = fmt(c.get_double("tau2", 0.6));
    kv["seeds"] = join_seeds(seeds);
    kv["epochs"] = std::to_string(c.get_int("epochs", 1));
    kv["max_iters"] = std::to_string(c.get_int("max_iters", 50));
}

int cmd_retrieve(const CommonOpts& opts) {
    const Config c = load_config(opts);
    std::vector<std::string> allowed = kAssocKeys;
    allowed.push_back("rule");
    allowed.push_back("sigma");
    c.require_known(allowed);

    const NetworkShape shape = shape_from(c);
    const int P = static_cast<int>(c.get_int("P", 10));
    require(P >= 1, "P must be >= 1");
    RuleKind kind;
    const std::string rule_name = c.get_string("rule", "allee");
    require(rule_kind_from_string(rule_name, kind), "unknown rule: " + rule_name);
    const LearningRule rule = rule_from(c, kind);
    const double sigma = c.get_double("sigma", 0.3);
    require(sigma >= 0.0 && sigma <= 1.0, "sigma must lie in [0, 1]");
    const auto seeds = seeds_from(c);
    const int epochs = static_cast<int>(c.get_int("epochs", 1));
    const int max_iters = static_cast<int>(c.get_int("max_iters", 50));
    require(epochs >= 0 && max_iters >= 0, "epochs, max_iters must be >= 0");
    const bool plots = c.get_bool("plots", false) || opts.plots;

    struct Row {
        std::uint64_t seed;
        int pattern;
        double accuracy;
        int iterations;
        bool converged;
    };
    std::vector<std::vector<Row>> rows(seeds.size());
    parallel_for(seeds.size(), [&](size_t si) {
        const std::uint64_t seed = seeds[si];
        const auto patterns = generate_patterns(shape, P, derive_seed({seed, 1}));
        const auto W = train(shape, rule, patterns, derive_seed({seed, 2}), epochs);
        for (int mu = 0; mu < P; ++mu) {
            const auto cue = corrupt(patterns[static_cast<size_t>(mu)].u, sigma,
                                     derive_seed({seed, 3, 0, static_cast<std::uint64_t>(mu)}));
            const auto res =
                retrieve(W, cue, patterns[static_cast<size_t>(mu)].v, max_iters);
            rows[si].push_back(Row{seed, mu, res.accuracy, res.iterations, res.converged});
        }
    });

    CsvWriter csv({"seed", "pattern", "accuracy", "iterations", "converged"});
    double sum = 0.0, sumsq = 0.0;
    long n = 0;
    for (const auto& per_seed : rows)
        for (const auto& r : per_seed) {
            csv.add_row({std::to_string(r.seed), std::to_string(r.pattern), fmt(r.accuracy),
                         std::to_string(r.iterations), r.converged ? "1" : "0"});
            sum += r.accuracy;
            sumsq += r.accuracy * r.accuracy;
            ++n;
        }
    const double mean = sum / static_cast<double>(n);
    const double sd = std::sqrt(std::max(0.0, sumsq / static_cast<double>(n) - mean * mean));

    CsvWriter summary({"mean", "sd", "n"});
    summary.add_row({fmt(mean), fmt(sd), std::to_string(n)});

    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    csv.write_file((out / "retrieve.csv").string());
    summary.write_file((out / "retrieve_summary.csv").string());

    std::map<std::string, std::string> kv;
    echo_assoc(kv, c, shape, seeds);
    kv["P"] = std::to_string(P);
    kv["rule"] = rule_name;
    kv["sigma"] = fmt(sigma);
    kv["plots"] = fmt_bool(plots);
    write_meta((out / "retrieve.meta").string(), "retrieve", kv);
    write_meta((out / "retrieve_summary.meta").string(), "retrieve", kv);

    std::cout << "mean accuracy " << fmt(mean) << " (sd " << fmt(sd) << ", n=" << n << ")\n";
    return 0;
}

int cmd_noise_sweep(const CommonOpts& opts) {
    const Config c = load_config(opts);
    std::vector<std::string> allowed = kAssocKeys;
    allowed.push_back("rules");
    allowed.push_back("sigmas");
    c.require_known(allowed);

    const NetworkShape shape = shape_from(c);
    const int P = static_cast<int>(c.get_int("P", 10));
    require(P >= 1, "P must be >= 1");
    const std::string rules_s = c.get_string(
        "rules", "hebbian,oja,allee,stdp_pair,stdp_weight,stdp_addmul,stdp_power,stdp_continuous");
    std::vector<LearningRule> rules;
    std::vector<std::string> rule_names;
    {
        std::istringstream in(rules_s);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            RuleKind kind;
            require(rule_kind_from_string(tok, kind), "unknown rule: " + tok);
            rules.push_back(rule_from(c, kind));
            rule_names.push_back(tok);
        }
    }
    require(!rules.empty(), "rules must be nonempty");
    const auto sigmas = c.has("sigmas") ? c.get_double_list("sigmas")
                                        : std::vector<double>{0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
    for (double s : sigmas) require(s >= 0.0 && s <= 1.0, "every sigma must lie in [0, 1]");
    const auto seeds = seeds_from(c);
    const int epochs = static_cast<int>(c.get_int("epochs", 1));
    const int max_iters = static_cast<int>(c.get_int("max_iters", 50));
    require(epochs >= 0 && max_iters >= 0, "epochs, max_iters must be >= 0");
    const bool plots = c.get_bool("plots", false) || opts.plots;

    const AccuracyTable table = noise_sweep(shape, rules, P, sigmas, seeds, epochs, max_iters);

    CsvWriter csv({"rule", "sigma", "mean", "sd", "n"});
    for (size_t r = 0; r < rules.size(); ++r)
        for (size_t s = 0; s < sigmas.size(); ++s)
            csv.add_row({rule_names[r], fmt(sigmas[s]), fmt(table.mean[r][s]),
                         fmt(table.sd[r][s]), std::to_string(table.n_samples)});

    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    csv.write_file((out / "noise_sweep.csv").string());

    std::map<std::string, std::string> kv;
    echo_assoc(kv, c, shape, seeds);
    kv["P"] = std::to_string(P);
    kv["rules"] = rules_s;
    kv["sigmas"] = join_doubles(sigmas);
    kv["plots"] = fmt_bool(plots);
    write_meta((out / "noise_sweep.meta").string(), "noise-sweep", kv);

    if (plots) {
        std::vector<Series> ss;
        for (size_t r = 0; r < rules.size(); ++r)
            ss.push_back(Series{rule_names[r], sigmas, table.mean[r]});
        write_text(out / "noise_sweep.svg",
                   svg_line_plot("accuracy vs noise", "sigma", "accuracy", ss));
    }
    std::cout << "wrote " << (out / "noise_sweep.csv").string() << " (" << rules.size()
              << " rules x " << sigmas.size() << " sigmas)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"allee-effect synaptic plasticity experiments"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* desc;
        int (*run)(const CommonOpts&);
    };
    const Sub subs[] = {
        {"simulate", "integrate one trajectory of the reduced model", cmd_simulate},
        {"fixed-points", "locate and classify fixed points", cmd_fixed_points},
        {"hopf-scan", "trace/determinant region scan + closed-form Hopf verdicts",
         cmd_hopf_scan},
        {"sweep", "bifurcation events along one parameter", cmd_sweep},
        {"overlap", "overlap-vs-time for a set of initial conditions", cmd_overlap},
        {"sensitivity", "vary one parameter with pinned companions", cmd_sensitivity},
        {"retrieve", "train one rule, corrupt, retrieve, score", cmd_retrieve},
        {"noise-sweep", "rule x sigma retrieval accuracy table", cmd_noise_sweep},
    };

    std::vector<std::pair<CommonOpts, int (*)(const CommonOpts&)>> runs(std::size(subs));
    for (size_t i = 0; i < std::size(subs); ++i) {
        CLI::App* sc = app.add_subcommand(subs[i].name, subs[i].desc);
        auto& opts = runs[i].first;
        runs[i].second = subs[i].run;
        sc->add_option("--config", opts.config_path, "key=value config file");
        sc->add_option("--set", opts.sets, "override: key=value (repeatable)");
        sc->add_option("--out", opts.out_dir, "output directory")->required();
        sc->add_flag("--plots", opts.plots, "also emit SVG plots");
    }

    CLI11_PARSE(app, argc, argv);

    for (size_t i = 0; i < std::size(subs); ++i) {
        if (app.get_subcommand(subs[i].name)->parsed()) {
            try {
                return runs[i].second(runs[i].first);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
        }
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
