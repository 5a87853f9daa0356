#include "wavecons/cli/scenario.hpp"

#include <wavecons/error.hpp>

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace wavecons::cli {

using json = nlohmann::json;

namespace {

constexpr Mode kModes[] = {Mode::identity, Mode::simulate, Mode::decay, Mode::map, Mode::coeff, Mode::convergence};

// Object reader that rejects keys it was never asked for.
class Obj {
public:
    Obj(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ValidationError(where() + "expected an object");
    }

    const json* get(const std::string& key) {
        used_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    std::optional<double> opt_num(const std::string& key) {
        const json* v = get(key);
        if (!v) return std::nullopt;
        if (!v->is_number()) throw ValidationError(where() + "key '" + key + "' must be a number");
        double d = v->get<double>();
        if (!std::isfinite(d)) throw ValidationError(where() + "key '" + key + "' must be finite");
        return d;
    }
    double num(const std::string& key, double def) { return opt_num(key).value_or(def); }

    std::optional<long long> opt_int(const std::string& key) {
        const json* v = get(key);
        if (!v) return std::nullopt;
        if (!v->is_number_integer()) throw ValidationError(where() + "key '" + key + "' must be an integer");
        return v->get<long long>();
    }
    int integer(const std::string& key, int def) { return static_cast<int>(opt_int(key).value_or(def)); }

    std::optional<std::string> opt_str(const std::string& key) {
        const json* v = get(key);
        if (!v) return std::nullopt;
        if (!v->is_string()) throw ValidationError(where() + "key '" + key + "' must be a string");
        return v->get<std::string>();
    }
    std::string str(const std::string& key, const std::string& def) { return opt_str(key).value_or(def); }

    std::string require_str(const std::string& key) {
        auto v = opt_str(key);
        if (!v) throw ValidationError(where() + "missing required key '" + key + "'");
        return *v;
    }

    std::vector<double> numbers(const std::string& key) {
        const json* v = get(key);
        if (!v) throw ValidationError(where() + "missing required key '" + key + "'");
        if (!v->is_array()) throw ValidationError(where() + "key '" + key + "' must be an array of numbers");
        std::vector<double> out;
        for (const auto& e : *v) {
            if (!e.is_number()) throw ValidationError(where() + "key '" + key + "' must be an array of numbers");
            out.push_back(e.get<double>());
        }
        return out;
    }

    std::vector<std::string> strings(const std::string& key) {
        const json* v = get(key);
        if (!v) return {};
        if (!v->is_array()) throw ValidationError(where() + "key '" + key + "' must be an array of strings");
        std::vector<std::string> out;
        for (const auto& e : *v) {
            if (!e.is_string()) throw ValidationError(where() + "key '" + key + "' must be an array of strings");
            out.push_back(e.get<std::string>());
        }
        return out;
    }

    Obj child(const std::string& key) {
        const json* v = get(key);
        return Obj(*v, path_.empty() ? key : path_ + "." + key);
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!used_.count(it.key())) throw ValidationError(where() + "unknown key '" + it.key() + "'");
        }
    }

    std::string where() const { return path_.empty() ? "config: " : "config." + path_ + ": "; }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> used_;
};

FieldSpec parse_field(Obj o) {
    FieldSpec f;
    f.kind = o.require_str("kind");
    if (f.kind == "constant") {
        auto v = o.opt_num("value");
        if (!v) throw ValidationError(o.where() + "missing required key 'value'");
        f.params = {*v};
    } else if (f.kind == "polynomial" || f.kind == "sinusoid" || f.kind == "gaussian" || f.kind == "traveling") {
        f.params = o.numbers(f.kind == "polynomial" ? "coefficients" : "params");
    } else {
        throw ValidationError(o.where() + "unknown field kind '" + f.kind +
                              "' (valid: polynomial, sinusoid, gaussian, traveling, constant)");
    }
    o.finish();
    build_field(f);
    return f;
}

json field_json(const FieldSpec& f) {
    json j;
    j["kind"] = f.kind;
    if (f.kind == "constant") j["value"] = f.params.at(0);
    else j[f.kind == "polynomial" ? "coefficients" : "params"] = f.params;
    return j;
}

NonlinSpec parse_nonlin(const json& v, const std::string& where) {
    NonlinSpec n;
    if (v.is_string()) {
        n.name = v.get<std::string>();
    } else if (v.is_object()) {
        Obj o(v, "f");
        n.name = o.require_str("name");
        n.k = o.opt_num("k");
        n.p = o.opt_num("p");
        o.finish();
    } else {
        throw ValidationError(where + "key 'f' must be a name or an object");
    }
    if (n.name == "custom") throw ValidationError(where + "custom nonlinearities are library-only");
    build_nonlinear(n);
    return n;
}

json nonlin_json(const NonlinSpec& n) {
    if (!n.k && !n.p) return n.name;
    json j;
    j["name"] = n.name;
    if (n.k) j["k"] = *n.k;
    if (n.p) j["p"] = *n.p;
    return j;
}

ProfileSpec parse_profile(Obj o) {
    ProfileSpec p;
    p.kind = o.require_str("kind");
    if (p.kind == "gaussian" || p.kind == "gaussian_slope") {
        p.amplitude = o.num("amplitude", 1.0);
        p.center = o.num("center", 0.0);
        p.width = o.num("width", 1.0);
        if (!(p.width > 0.0)) throw ValidationError(o.where() + "width must be positive");
    } else if (p.kind == "sine") {
        p.amplitude = o.num("amplitude", 1.0);
        p.wavenumber = o.num("wavenumber", 1.0);
        p.phase = o.num("phase", 0.0);
    } else if (p.kind != "zero") {
        throw ValidationError(o.where() + "unknown profile kind '" + p.kind +
                              "' (valid: gaussian, gaussian_slope, sine, zero)");
    }
    o.finish();
    return p;
}

json profile_json(const ProfileSpec& p) {
    json j;
    j["kind"] = p.kind;
    if (p.kind == "gaussian" || p.kind == "gaussian_slope") {
        j["amplitude"] = p.amplitude;
        j["center"] = p.center;
        j["width"] = p.width;
    } else if (p.kind == "sine") {
        j["amplitude"] = p.amplitude;
        j["wavenumber"] = p.wavenumber;
        j["phase"] = p.phase;
    }
    return j;
}

std::function<double(double)> profile_fn(const ProfileSpec& p) {
    if (p.kind == "gaussian") {
        return [p](double x) {
            double z = (x - p.center) / p.width;
            return p.amplitude * std::exp(-z * z);
        };
    }
    if (p.kind == "gaussian_slope") {
        return [p](double x) {
            double z = (x - p.center) / p.width;
            return p.amplitude * z * std::exp(-z * z);
        };
    }
    if (p.kind == "sine") return [p](double x) { return p.amplitude * std::sin(p.wavenumber * x + p.phase); };
    return [](double) { return 0.0; };
}

const std::set<std::string> kFieldNames{"gaussian", "sinusoid", "polynomial", "traveling"};

}  // namespace

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::identity: return "identity";
        case Mode::simulate: return "simulate";
        case Mode::decay: return "decay";
        case Mode::map: return "map";
        case Mode::coeff: return "coeff";
        case Mode::convergence: return "convergence";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view s) {
    for (Mode m : kModes) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}

std::string_view command_name(Mode m) { return m == Mode::identity ? "check-identity" : to_string(m); }

std::optional<Mode> parse_command(std::string_view s) {
    for (Mode m : kModes) {
        if (command_name(m) == s) return m;
    }
    return std::nullopt;
}

FieldFn build_field(const FieldSpec& f) {
    if (f.kind == "constant") {
        if (f.params.size() != 1) throw ValidationError("field: constant takes one value");
        return FieldFn::constant(f.params[0]);
    }
    static const std::pair<const char*, FieldKind> kinds[] = {{"polynomial", FieldKind::polynomial},
                                                              {"sinusoid", FieldKind::sinusoid},
                                                              {"gaussian", FieldKind::gaussian},
                                                              {"traveling", FieldKind::traveling}};
    for (auto [name, kind] : kinds) {
        if (f.kind == name) return make_test_field(kind, f.params);
    }
    throw ValidationError("field: unknown kind '" + f.kind + "'");
}

NonlinearFn build_nonlinear(const NonlinSpec& n) {
    auto none = [&](const char* what) {
        if (n.k || n.p) throw ValidationError(std::string("f: '") + what + "' takes no parameters");
    };
    if (n.name == "cubic") {
        none("cubic");
        return nonlinear::cubic();
    }
    if (n.name == "sine") {
        none("sine");
        return nonlinear::sine();
    }
    if (n.name == "zero") {
        none("zero");
        return nonlinear::zero();
    }
    if (n.name == "linear") {
        if (!n.k || n.p) throw ValidationError("f: 'linear' needs k only");
        return nonlinear::linear(*n.k);
    }
    if (n.name == "power") {
        if (!n.k || !n.p) throw ValidationError("f: 'power' needs k and p");
        return nonlinear::power(*n.k, *n.p);
    }
    throw ValidationError("f: unknown nonlinearity '" + n.name + "' (valid: cubic, sine, power, linear, zero)");
}

Scenario parse_config(std::string_view document) {
    json root;
    try {
        root = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        throw ValidationError("config: malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    Obj o(root, "");
    Scenario s;

    auto mode = parse_mode(o.require_str("mode"));
    if (!mode) {
        throw ValidationError("config: unknown mode (valid: identity, simulate, decay, map, coeff, convergence)");
    }
    s.mode = *mode;

    if (s.mode != Mode::coeff || o.has("case")) {
        s.case_tag = o.require_str("case");
        if (!parse_case_tag(s.case_tag)) {
            throw ValidationError("config: unknown case tag '" + s.case_tag + "'; valid tags: " + case_tag_list());
        }
    }
    s.c = o.num("c", 1.0);
    if (!(s.c > 0.0)) throw ValidationError("config: c must be positive");
    s.a = o.opt_num("a");
    s.b = o.opt_num("b");
    s.ctilde = o.opt_num("ctilde");
    s.alpha = o.opt_num("alpha");
    s.k = o.opt_num("k");
    s.p = o.opt_num("p");
    if (s.p && !(*s.p > 0.0)) throw ValidationError("config: p must be positive (p > 0), got " + std::to_string(*s.p));
    if (auto sg = o.opt_int("sign")) {
        if (*sg != 1 && *sg != -1) throw ValidationError("config: sign must be 1 or -1");
        s.sign = static_cast<int>(*sg);
    }
    if (o.has("a_profile")) s.a_profile = parse_field(o.child("a_profile"));
    if (o.has("alpha_profile")) s.alpha_profile = parse_field(o.child("alpha_profile"));
    if (const json* f = o.get("f")) s.f = parse_nonlin(*f, o.where());
    s.case4_exponent = o.str("case4_exponent", s.case4_exponent);
    if (s.case4_exponent != "derived" && s.case4_exponent != "alt") {
        throw ValidationError("config: case4_exponent must be 'derived' or 'alt'");
    }
    s.k_variant = o.str("k_variant", s.k_variant);
    {
        bool ok = false;
        for (KVariant v : k_variants(KCase::case3)) ok = ok || to_string(v) == s.k_variant;
        if (!ok) throw ValidationError("config: unknown k_variant '" + s.k_variant + "'");
    }
    s.ode_steps = o.integer("ode_steps", s.ode_steps);
    if (s.ode_steps < 1) throw ValidationError("config: ode_steps must be >= 1");

    s.laws = o.strings("laws");
    for (const auto& l : s.laws) {
        if (!parse_law_selector(l)) {
            throw ValidationError("config: unknown law '" + l + "'; valid: " + law_selector_list());
        }
    }
    s.k_normalization = o.str("k_normalization", s.k_normalization);
    if (s.k_normalization != "display" && s.k_normalization != "density" && s.k_normalization != "auto") {
        throw ValidationError("config: k_normalization must be display, density or auto");
    }

    s.fields = o.strings("fields");
    for (const auto& f : s.fields) {
        if (!kFieldNames.count(f)) {
            throw ValidationError("config: unknown field '" + f + "' (valid: gaussian, sinusoid, polynomial, traveling)");
        }
    }
    if (o.has("box")) {
        Obj b = o.child("box");
        BoxSpec bs;
        bs.t_min = b.num("t_min", bs.t_min);
        bs.t_max = b.num("t_max", bs.t_max);
        bs.x_min = b.num("x_min", bs.x_min);
        bs.x_max = b.num("x_max", bs.x_max);
        bs.nt = b.integer("nt", bs.nt);
        bs.nx = b.integer("nx", bs.nx);
        b.finish();
        if (bs.nt < 1 || bs.nx < 1 || bs.t_max < bs.t_min || bs.x_max < bs.x_min) {
            throw ValidationError("config.box: empty sample box");
        }
        s.box = bs;
    }
    s.h0 = o.num("h0", s.h0);
    if (!(s.h0 > 0.0)) throw ValidationError("config: h0 must be positive");
    s.min_order = o.num("min_order", s.min_order);
    s.draws = o.integer("draws", s.draws);
    if (s.draws < 1) throw ValidationError("config: draws must be >= 1");

    s.t_end = o.num("t_end", s.t_end);
    s.cfl = o.num("cfl", s.cfl);
    s.spatial_order = o.integer("spatial_order", s.spatial_order);
    s.record_every = o.integer("record_every", s.record_every);
    if (o.has("grid")) {
        Obj g = o.child("grid");
        s.grid.x_min = g.num("x_min", s.grid.x_min);
        s.grid.x_max = g.num("x_max", s.grid.x_max);
        s.grid.n = g.integer("n", s.grid.n);
        s.grid.bc = g.str("bc", s.grid.bc);
        g.finish();
        if (s.grid.bc != "periodic" && s.grid.bc != "dirichlet_zero") {
            throw ValidationError("config.grid: bc must be periodic or dirichlet_zero");
        }
        if (s.grid.n < 8 || !(s.grid.x_max > s.grid.x_min)) throw ValidationError("config.grid: need n >= 8 and x_max > x_min");
    }
    if (o.has("initial")) {
        Obj i = o.child("initial");
        if (i.has("u")) s.u0 = parse_profile(i.child("u"));
        if (i.has("ut")) s.ut0 = parse_profile(i.child("ut"));
        i.finish();
    }
    s.levels = o.integer("levels", s.levels);
    if (s.levels < 3) throw ValidationError("config: levels must be >= 3");

    if (s.mode == Mode::coeff) {
        s.problem = o.require_str("problem");
        if (s.problem != "kappa" && s.problem != "k3" && s.problem != "k4" && s.problem != "b" && s.problem != "b0") {
            throw ValidationError("config: unknown problem '" + s.problem + "' (valid: kappa, k3, k4, b, b0)");
        }
    } else {
        s.problem = o.str("problem", "");
        if (!s.problem.empty()) throw ValidationError("config: key 'problem' is only valid in coeff mode");
    }
    if (o.has("mesh")) {
        Obj m = o.child("mesh");
        s.mesh.t_max = m.num("t_max", s.mesh.t_max);
        s.mesh.x_min = m.num("x_min", s.mesh.x_min);
        s.mesh.x_max = m.num("x_max", s.mesh.x_max);
        s.mesh.nt = m.integer("nt", s.mesh.nt);
        s.mesh.nx = m.integer("nx", s.mesh.nx);
        m.finish();
        CoeffGrid check(s.mesh);
    }
    s.ode_step = o.num("ode_step", s.ode_step);
    if (!(s.ode_step > 0.0)) throw ValidationError("config: ode_step must be positive");

    if (auto seed = o.opt_int("seed")) s.seed = static_cast<std::uint64_t>(*seed);
    s.output_path = o.str("output", "");
    o.finish();

    // Semantic checks that need the assembled objects.
    if (s.mode == Mode::coeff) {
        bool alpha = s.problem == "kappa";
        if (alpha && !s.alpha_profile) throw ValidationError("config: problem 'kappa' needs 'alpha_profile'");
        if (!alpha && !s.a_profile) throw ValidationError("config: problem '" + s.problem + "' needs 'a_profile'");
        if ((s.problem == "kappa" || s.problem == "k3") && !s.sign) {
            throw ValidationError("config: problem '" + s.problem + "' needs 'sign'");
        }
        if (s.problem == "k4" && s.k_variant != "derived" && s.k_variant != "alt_product") {
            throw ValidationError("config: k4 supports k_variant derived or alt_product");
        }
    } else {
        build_case(s);
        build_laws(s);
        if (s.mode == Mode::simulate || s.mode == Mode::decay || s.mode == Mode::convergence) {
            build_sim_config(s).validate();
        }
    }
    return s;
}

std::string to_json(const Scenario& s) {
    json j;
    j["mode"] = to_string(s.mode);
    if (!s.case_tag.empty()) j["case"] = s.case_tag;
    j["c"] = s.c;
    if (s.a) j["a"] = *s.a;
    if (s.b) j["b"] = *s.b;
    if (s.ctilde) j["ctilde"] = *s.ctilde;
    if (s.alpha) j["alpha"] = *s.alpha;
    if (s.k) j["k"] = *s.k;
    if (s.p) j["p"] = *s.p;
    if (s.sign) j["sign"] = *s.sign;
    if (s.a_profile) j["a_profile"] = field_json(*s.a_profile);
    if (s.alpha_profile) j["alpha_profile"] = field_json(*s.alpha_profile);
    if (s.f) j["f"] = nonlin_json(*s.f);
    j["case4_exponent"] = s.case4_exponent;
    j["k_variant"] = s.k_variant;
    j["ode_steps"] = s.ode_steps;
    j["laws"] = s.laws;
    j["k_normalization"] = s.k_normalization;
    j["fields"] = s.fields;
    if (s.box) {
        j["box"] = {{"t_min", s.box->t_min}, {"t_max", s.box->t_max}, {"x_min", s.box->x_min},
                    {"x_max", s.box->x_max}, {"nt", s.box->nt},       {"nx", s.box->nx}};
    }
    j["h0"] = s.h0;
    j["min_order"] = s.min_order;
    j["draws"] = s.draws;
    j["t_end"] = s.t_end;
    j["cfl"] = s.cfl;
    j["spatial_order"] = s.spatial_order;
    j["record_every"] = s.record_every;
    j["grid"] = {{"x_min", s.grid.x_min}, {"x_max", s.grid.x_max}, {"n", s.grid.n}, {"bc", s.grid.bc}};
    j["initial"] = {{"u", profile_json(s.u0)}, {"ut", profile_json(s.ut0)}};
    j["levels"] = s.levels;
    if (!s.problem.empty()) j["problem"] = s.problem;
    j["mesh"] = {{"t_max", s.mesh.t_max}, {"x_min", s.mesh.x_min}, {"x_max", s.mesh.x_max},
                 {"nt", s.mesh.nt},       {"nx", s.mesh.nx}};
    j["ode_step"] = s.ode_step;
    j["seed"] = s.seed;
    if (!s.output_path.empty()) j["output"] = s.output_path;
    return j.dump(2);
}

CaseSpec build_case(const Scenario& s, int draw) {
    auto tag = parse_case_tag(s.case_tag);
    if (!tag) throw ValidationError("config: unknown case tag '" + s.case_tag + "'; valid tags: " + case_tag_list());
    double jitter = 1.0;
    if (draw > 0) {
        std::mt19937_64 rng(s.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(draw));
        jitter = 1.0 + 0.1 * std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    }
    auto scaled = [jitter](const std::optional<double>& v) -> std::optional<double> {
        if (!v) return v;
        return *v * jitter;
    };
    CaseSpec c;
    c.tag = *tag;
    c.c = s.c;
    c.params.a = scaled(s.a);
    c.params.b = scaled(s.b);
    c.params.ctilde = scaled(s.ctilde);
    c.params.alpha = scaled(s.alpha);
    c.params.k = scaled(s.k);
    c.params.p = s.p;
    c.params.sign = s.sign;
    c.case4_exponent = s.case4_exponent == "alt" ? Case4Exponent::alt : Case4Exponent::derived;
    if (s.f) c.nonlin = build_nonlinear(*s.f);
    else if (c.tag != CaseTag::POWERLAW) throw ValidationError("config: missing required key 'f'");
    if (s.a_profile) c.profiles.a = build_field(*s.a_profile);
    if (s.alpha_profile) c.profiles.alpha = build_field(*s.alpha_profile);

    KVariant variant = KVariant::derived;
    for (KVariant v : k_variants(KCase::case3)) {
        if (to_string(v) == s.k_variant) variant = v;
    }
    auto need = [&](bool ok, const char* key) {
        if (!ok) throw ValidationError(std::string("config: ") + std::string(wavecons::to_string(c.tag)) +
                                       " needs '" + key + "'");
    };
    if (c.tag == CaseTag::P2_iii) {
        need(c.profiles.a.has_value(), "a_profile");
        need(s.sign.has_value(), "sign");
        if (c.profiles.a->max_order() < 4) throw ValidationError("config: a_profile needs max_order >= 4");
        c.profiles.k = characteristic_field(build_k_problem(*c.profiles.a, KCase::case3, *s.sign, s.c, variant),
                                            s.ode_steps);
    } else if (c.tag == CaseTag::P2_iv) {
        need(c.profiles.a.has_value(), "a_profile");
        if (variant != KVariant::derived && variant != KVariant::alt_product) {
            throw ValidationError("config: P2_iv supports k_variant derived or alt_product");
        }
        const FieldFn& a = *c.profiles.a;
        c.profiles.k = characteristic_field(build_k_problem(a, KCase::case4, 1, s.c, variant), s.ode_steps);
        c.profiles.b = characteristic_field(build_b_problem(a, s.c), s.ode_steps);
        c.profiles.b0 = characteristic_field(build_b0_problem(a, s.c), s.ode_steps);
    } else if (c.tag == CaseTag::NULLFORM) {
        need(c.profiles.alpha.has_value(), "alpha_profile");
        need(s.sign.has_value(), "sign");
        c.profiles.kappa = characteristic_field(build_kappa_problem(*c.profiles.alpha, *s.sign, s.c), s.ode_steps);
    }
    validate(c);
    return c;
}

std::vector<LawSelector> build_laws(const Scenario& s) {
    auto tag = *parse_case_tag(s.case_tag);
    auto ok = supported_laws(tag);
    if (s.laws.empty()) return ok;
    std::vector<LawSelector> out;
    for (const auto& name : s.laws) {
        LawSelector l = *parse_law_selector(name);
        if (std::find(ok.begin(), ok.end(), l) == ok.end()) {
            std::string list;
            for (auto x : ok) list += (list.empty() ? "" : ", ") + std::string(wavecons::to_string(x));
            throw ValidationError("config: law '" + name + "' is not available for " + s.case_tag +
                                  " (supported: " + list + ")");
        }
        out.push_back(l);
    }
    return out;
}

SimConfig build_sim_config(const Scenario& s) {
    SimConfig cfg;
    cfg.equation = build_case(s);
    cfg.laws = build_laws(s);
    cfg.law_options.k_norm = s.k_normalization == "density" ? KNormalization::density : KNormalization::display;
    cfg.t_end = s.t_end;
    cfg.cfl = s.cfl;
    cfg.spatial_order = s.spatial_order;
    cfg.record_every = s.record_every;
    return cfg;
}

GridState build_initial(const Scenario& s, int n) {
    auto bc = s.grid.bc == "periodic" ? BoundaryCondition::periodic : BoundaryCondition::dirichlet_zero;
    return sample_state(s.grid.x_min, s.grid.x_max, static_cast<std::size_t>(n), bc, profile_fn(s.u0),
                        profile_fn(s.ut0), 0.0);
}

SampleBox build_box(const Scenario& s) {
    SampleBox b;
    if (s.box) {
        b.t_min = s.box->t_min;
        b.t_max = s.box->t_max;
        b.x_min = s.box->x_min;
        b.x_max = s.box->x_max;
        b.nt = s.box->nt;
        b.nx = s.box->nx;
        return b;
    }
    if (s.case_tag == "P2_iii" || s.case_tag == "P2_iv" || s.case_tag == "NULLFORM") {
        b.t_min = 0.1;
        b.nt = 5;
        b.nx = 6;
    }
    return b;
}

}  // namespace wavecons::cli
