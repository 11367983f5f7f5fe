#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "invlim/endo.hpp"
#include "invlim/error.hpp"
#include "invlim/limit.hpp"
#include "invlim/parse.hpp"
#include "invlim/points.hpp"

using nlohmann::json;
using namespace invlim;

namespace {

// Remembered across the command callback so error reports match the
// requested output format.
bool g_json = false;

constexpr const char* kSchema = "invlim.report/1";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Scalar> parse_point_list(const std::string& text, const Field& k) {
  std::vector<Scalar> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(parse_scalar(piece, k));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string point_text(const std::vector<Scalar>& c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += c[i].str();
  }
  return out;
}

json point_json(const std::vector<Scalar>& c) {
  json a = json::array();
  for (const auto& s : c) a.push_back(s.str());
  return a;
}

json point_list_json(const std::vector<std::vector<Scalar>>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

json matrix_json(const std::vector<std::vector<Scalar>>& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& s : row) r.push_back(s.str());
    a.push_back(r);
  }
  return a;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

// ------------------------------------------------------------- options ----

struct MapOpts {
  std::string map_file;
  std::string field_desc;
  std::string point_text;
  bool json_out = false;
};

struct LoadedMap {
  Field field;
  PolyEndo map;
  std::vector<Scalar> basepoint;
};

LoadedMap load_map(const MapOpts& o) {
  std::optional<Field> fallback;
  if (!o.field_desc.empty()) fallback = parse_field(o.field_desc);
  ParsedMap pm = parse_map(read_file(o.map_file), fallback);
  std::vector<Scalar> a;
  if (!o.point_text.empty())
    a = parse_point_list(o.point_text, pm.field);
  else if (pm.basepoint)
    a = *pm.basepoint;
  else
    a.assign(static_cast<size_t>(pm.map.nvars()), Scalar::zero(pm.field));
  if (static_cast<int>(a.size()) != pm.map.nvars())
    fail(Errc::ArityMismatch, "base point length does not match the map");
  return LoadedMap{pm.field, std::move(pm.map), std::move(a)};
}

// The reduction to a fixed origin: when the map moves the requested base
// point, conjugate by translations (recording the image point) so every
// truncation-based command can work at a fixed point.
struct Prepared {
  PolyEndo work;
  std::vector<Scalar> base;  // base point for `work`
  bool translated = false;
  std::vector<Scalar> image_point;  // c with work-pullback via f(c) = a
};

Prepared prepare(const LoadedMap& lm) {
  if (lm.map.eval_point(lm.basepoint) == lm.basepoint)
    return Prepared{lm.map, lm.basepoint, false, {}};
  Normalized nz = translate_normalize(lm.map, lm.basepoint);
  std::vector<Scalar> origin(static_cast<size_t>(lm.map.nvars()), Scalar::zero(lm.field));
  return Prepared{std::move(nz.psi), std::move(origin), true, std::move(nz.c)};
}

void add_translation_keys(json& r, const Prepared& p) {
  r["translated"] = p.translated;
  if (p.translated) {
    r["image_point"] = point_json(p.image_point);
    r["normalized_map"] = p.work.str();
  }
}

TruncSpec single_spec(const Field& k, int nvars, const std::vector<Scalar>& a, int level,
                      int madic_order) {
  if (madic_order > 0) return TruncSpec::madic(k, nvars, madic_order, a);
  return TruncSpec::frobenius(k, nvars, level, a);
}

// ------------------------------------------------------------ commands ----

void cmd_check(const MapOpts& o, int level, int madic_order) {
  g_json = o.json_out;
  LoadedMap lm = load_map(o);
  Prepared p = prepare(lm);
  TruncSpec spec = single_spec(lm.field, lm.map.nvars(), p.base, level, madic_order);
  TruncEndo sigma = project_endo(p.work, spec);
  AutomorphismVerdict v = check_automorphism(sigma);
  JacobianCheck jc = jacobian_constant_check(lm.map);

  if (o.json_out) {
    json r;
    r["schema"] = kSchema;
    r["command"] = "check";
    r["field"] = lm.field.descriptor();
    r["ring"] = spec.str();
    r["map"] = lm.map.str();
    r["truncated_map"] = sigma.str();
    r["is_automorphism"] = v.is_automorphism;
    r["linear_part"] = matrix_json(v.linear);
    r["linear_det"] = v.linear_det.str();
    r["jacobian_det"] = v.jacobian_det.str();
    r["jacobian_det_is_unit"] = v.jacobian_det.is_unit();
    r["poly_jacobian_det"] = jc.value.str();
    r["poly_jacobian_constant_unit"] = jc.is_constant_unit;
    add_translation_keys(r, p);
    emit(r);
    return;
  }
  std::cout << "ring: " << spec.str() << "\n";
  std::cout << "map: " << lm.map.str() << "\n";
  if (p.translated)
    std::cout << "translated via image point (" << point_text(p.image_point)
              << "); normalized map: " << p.work.str() << "\n";
  std::cout << "truncated map: " << sigma.str() << "\n";
  std::cout << "linear det: " << v.linear_det.str() << "\n";
  std::cout << "jacobian det: " << v.jacobian_det.str()
            << (v.jacobian_det.is_unit() ? " (unit)" : " (not a unit)") << "\n";
  std::cout << "poly jacobian det: " << jc.value.str()
            << (jc.is_constant_unit ? " (constant unit)" : " (not a constant unit)") << "\n";
  std::cout << "automorphism: " << (v.is_automorphism ? "yes" : "no") << "\n";
}

void cmd_trunc_invert(const MapOpts& o, int level, int madic_order) {
  g_json = o.json_out;
  LoadedMap lm = load_map(o);
  Prepared p = prepare(lm);
  TruncSpec spec = single_spec(lm.field, lm.map.nvars(), p.base, level, madic_order);
  TruncEndo sigma = project_endo(p.work, spec);
  int rounds = 0;
  TruncEndo tau = endo_invert(sigma, &rounds);

  if (o.json_out) {
    json r;
    r["schema"] = kSchema;
    r["command"] = "trunc-invert";
    r["field"] = lm.field.descriptor();
    r["ring"] = spec.str();
    r["map"] = lm.map.str();
    r["truncated_map"] = sigma.str();
    r["inverse"] = tau.str();
    r["correction_rounds"] = rounds;
    add_translation_keys(r, p);
    emit(r);
    return;
  }
  std::cout << "ring: " << spec.str() << "\n";
  if (p.translated)
    std::cout << "translated via image point (" << point_text(p.image_point)
              << "); normalized map: " << p.work.str() << "\n";
  std::cout << "truncated map: " << sigma.str() << "\n";
  std::cout << "inverse: " << tau.str() << "\n";
  std::cout << "correction rounds: " << rounds << "\n";
}

void cmd_invert(const MapOpts& o, int max_level, long long degree_bound) {
  g_json = o.json_out;
  LoadedMap lm = load_map(o);
  Prepared p = prepare(lm);
  if (degree_bound <= 0) degree_bound = default_degree_bound(p.work);
  InversionOutcome out = lift_invert(p.work, p.base, max_level, degree_bound);

  json r;
  r["schema"] = kSchema;
  r["command"] = "invert";
  r["field"] = lm.field.descriptor();
  r["map"] = lm.map.str();
  r["basepoint"] = point_json(lm.basepoint);
  r["ladder"] = lm.field.characteristic() > 0 ? "frobenius" : "madic";
  r["max_level"] = max_level;
  r["degree_bound"] = degree_bound;
  add_translation_keys(r, p);

  if (const auto* st = std::get_if<Stabilized>(&out)) {
    PolyEndo inverse = st->inverse;
    if (p.translated) {
      // Pull the inverse of the normalized map back to the original one:
      // original^-1(x) = c + psi^-1(x - a).
      std::vector<Polynomial> images;
      images.reserve(static_cast<size_t>(lm.map.nvars()));
      for (int i = 0; i < lm.map.nvars(); ++i)
        images.push_back(shift_coords(st->inverse.image(i), lm.basepoint, ShiftDir::ToX) +
                         Polynomial::constant(lm.field, lm.map.nvars(),
                                              p.image_point[static_cast<size_t>(i)]));
      inverse = PolyEndo(lm.field, std::move(images));
      PolyEndo id = PolyEndo::identity(lm.field, lm.map.nvars());
      if (compose(lm.map, inverse) != id || compose(inverse, lm.map) != id)
        throw std::logic_error("translated inverse failed the round trip");
    }
    r["stabilized"] = true;
    r["level"] = st->level;
    r["inverse"] = inverse.str();
    if (o.json_out) {
      emit(r);
    } else {
      std::cout << "stabilized at level " << st->level << "\n";
      std::cout << "inverse: " << inverse.str() << "\n";
    }
    return;
  }
  const auto& ns = std::get<NotStabilized>(out);
  r["stabilized"] = false;
  r["levels_tried"] = ns.max_level;
  r["candidate_degrees"] = ns.candidate_degrees;
  r["last_candidate"] = ns.last_candidate.str();
  if (o.json_out) {
    emit(r);
  } else {
    std::cout << "not stabilized after " << ns.max_level << " levels\n";
    std::cout << "candidate degrees:";
    for (int d : ns.candidate_degrees) std::cout << " " << d;
    std::cout << "\n";
    std::cout << "last candidate: " << ns.last_candidate.str() << "\n";
  }
}

void cmd_project(const MapOpts& o, int max_level, bool force_madic) {
  g_json = o.json_out;
  LoadedMap lm = load_map(o);
  Prepared p = prepare(lm);
  TruncKind kind = (force_madic || lm.field.characteristic() == 0) ? TruncKind::MAdic
                                                                   : TruncKind::Frobenius;
  CoherentFamily fam = build_family(p.work, p.base, max_level, kind);
  bool coherent = check_coherence(fam);

  if (o.json_out) {
    json r;
    r["schema"] = kSchema;
    r["command"] = "project";
    r["field"] = lm.field.descriptor();
    r["map"] = lm.map.str();
    r["kind"] = kind == TruncKind::Frobenius ? "frobenius" : "madic";
    r["coherent"] = coherent;
    json levels = json::array();
    for (size_t i = 0; i < fam.levels.size(); ++i) {
      json l;
      l["level"] = static_cast<int>(i + 1);
      l["ring"] = fam.specs[i].str();
      l["images"] = fam.levels[i].str();
      levels.push_back(std::move(l));
    }
    r["levels"] = std::move(levels);
    add_translation_keys(r, p);
    emit(r);
    return;
  }
  if (p.translated)
    std::cout << "translated via image point (" << point_text(p.image_point)
              << "); normalized map: " << p.work.str() << "\n";
  for (size_t i = 0; i < fam.levels.size(); ++i)
    std::cout << "level " << (i + 1) << " [" << fam.specs[i].str()
              << "]: " << fam.levels[i].str() << "\n";
  std::cout << "coherent: " << (coherent ? "yes" : "no") << "\n";
}

void cmd_points(const MapOpts& o, const std::string& over_desc) {
  g_json = o.json_out;
  std::optional<Field> fallback;
  if (!o.field_desc.empty()) fallback = parse_field(o.field_desc);
  ParsedMap pm = parse_map(read_file(o.map_file), fallback);
  Field target = over_desc.empty() ? pm.field : parse_field(over_desc);

  std::optional<std::vector<Scalar>> fiber_over;
  if (!o.point_text.empty())
    fiber_over = parse_point_list(o.point_text, target);
  else if (pm.basepoint)
    fiber_over = *pm.basepoint;

  PointMapReport rep = enumerate_report(pm.map, target, fiber_over, Exec::Parallel);

  if (o.json_out) {
    json r;
    r["schema"] = kSchema;
    r["command"] = "points";
    r["field"] = rep.field_descriptor;
    r["map"] = pm.map.str();
    r["domain_size"] = rep.domain_size;
    r["image_size"] = rep.image_size;
    r["injective"] = rep.injective;
    r["surjective"] = rep.surjective;
    r["fixed_points"] = point_list_json(rep.fixed_points);
    if (rep.fiber_over) {
      r["fiber_over"] = point_json(*rep.fiber_over);
      r["fiber"] = point_list_json(rep.fiber);
    }
    emit(r);
    return;
  }
  std::cout << "field: " << rep.field_descriptor << "\n";
  std::cout << "domain size: " << rep.domain_size << "\n";
  std::cout << "image size: " << rep.image_size << "\n";
  std::cout << "injective: " << (rep.injective ? "yes" : "no")
            << ", surjective: " << (rep.surjective ? "yes" : "no") << "\n";
  std::cout << "fixed points:";
  for (const auto& c : rep.fixed_points) std::cout << " (" << point_text(c) << ")";
  std::cout << "\n";
  if (rep.fiber_over) {
    std::cout << "fiber over (" << point_text(*rep.fiber_over) << "):";
    for (const auto& c : rep.fiber) std::cout << " (" << point_text(c) << ")";
    std::cout << "\n";
  }
}

void cmd_dim(const MapOpts& o, int nvars, int level, int madic_order) {
  g_json = o.json_out;
  Field k = [&] {
    if (!o.field_desc.empty()) return parse_field(o.field_desc);
    if (!o.map_file.empty()) return parse_map(read_file(o.map_file)).field;
    fail(Errc::UnsupportedField, "dim needs --field or --map");
  }();
  int n = nvars;
  std::vector<Scalar> a;
  if (!o.map_file.empty()) {
    ParsedMap pm = parse_map(read_file(o.map_file), k);
    if (n == 0) n = pm.map.nvars();
    if (pm.basepoint) a = *pm.basepoint;
  }
  if (n == 0) fail(Errc::IndexOutOfRange, "dim needs -n (or --map to infer it)");
  if (!o.point_text.empty()) a = parse_point_list(o.point_text, k);
  TruncSpec spec = single_spec(k, n, a, level, madic_order);

  if (o.json_out) {
    json r;
    r["schema"] = kSchema;
    r["command"] = "dim";
    r["ring"] = spec.str();
    r["dimension"] = spec.dimension().str();
    r["nilpotency_index"] = spec.nilpotency_index();
    emit(r);
    return;
  }
  std::cout << "ring: " << spec.str() << "\n";
  std::cout << "dimension: " << spec.dimension().str() << "\n";
  std::cout << "nilpotency index: " << spec.nilpotency_index() << "\n";
}

void add_map_opts(CLI::App* cmd, MapOpts& o, bool map_required = true) {
  auto* m = cmd->add_option("--map", o.map_file, "map document file");
  if (map_required) m->required();
  cmd->add_option("--field", o.field_desc, "field descriptor (fallback for files without one)");
  cmd->add_option("--point", o.point_text, "comma-separated point a1,...,an");
  cmd->add_flag("--json", o.json_out, "structured output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in truncated polynomial rings: automorphism checks, "
               "constructive inversion, inverse-limit lifting, point-map census"};
  app.require_subcommand(1);

  MapOpts check_o, tinv_o, inv_o, proj_o, pts_o, dim_o;
  int check_level = 1, check_madic = 0;
  int tinv_level = 1, tinv_madic = 0;
  int inv_max_level = 6;
  long long inv_degree_bound = 0;
  int proj_max_level = 3;
  bool proj_madic = false;
  std::string pts_over;
  int dim_n = 0, dim_level = 1, dim_madic = 0;

  auto* check = app.add_subcommand("check", "automorphism criterion on one truncation level");
  add_map_opts(check, check_o);
  check->add_option("--level", check_level, "truncation level s (default 1)");
  check->add_option("--madic", check_madic, "use the m-adic truncation of this order instead");
  check->callback([&] { cmd_check(check_o, check_level, check_madic); });

  auto* tinv = app.add_subcommand("trunc-invert", "invert the map on one truncation level");
  add_map_opts(tinv, tinv_o);
  tinv->add_option("--level", tinv_level, "truncation level s (default 1)");
  tinv->add_option("--madic", tinv_madic, "use the m-adic truncation of this order instead");
  tinv->callback([&] { cmd_trunc_invert(tinv_o, tinv_level, tinv_madic); });

  auto* inv = app.add_subcommand("invert", "inverse-limit lifting to an exact inverse");
  add_map_opts(inv, inv_o);
  inv->add_option("--max-level", inv_max_level, "deepest ladder level to try (default 6)");
  inv->add_option("--degree-bound", inv_degree_bound,
                  "stop once a candidate exceeds this degree (default deg^n)");
  inv->callback([&] { cmd_invert(inv_o, inv_max_level, inv_degree_bound); });

  auto* proj = app.add_subcommand("project", "restrict to levels 1..S and check coherence");
  add_map_opts(proj, proj_o);
  proj->add_option("--max-level", proj_max_level, "number of levels (default 3)");
  proj->add_flag("--madic", proj_madic, "use the m-adic tower even in characteristic p");
  proj->callback([&] { cmd_project(proj_o, proj_max_level, proj_madic); });

  auto* pts = app.add_subcommand("points", "brute-force point-map census over a finite field");
  add_map_opts(pts, pts_o);
  pts->add_option("--over", pts_over, "enumerate over this field (default: the map's)");
  pts->callback([&] { cmd_points(pts_o, pts_over); });

  auto* dim = app.add_subcommand("dim", "dimension and nilpotency index of a truncated ring");
  add_map_opts(dim, dim_o, /*map_required=*/false);
  dim->add_option("-n,--nvars", dim_n, "variable count");
  dim->add_option("--level", dim_level, "truncation level s (default 1)");
  dim->add_option("--madic", dim_madic, "use the m-adic truncation of this order instead");
  dim->callback([&] { cmd_dim(dim_o, dim_n, dim_level, dim_madic); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const Error& e) {
    if (g_json) {
      json r;
      r["schema"] = kSchema;
      r["error"] = errc_name(e.code());
      r["message"] = e.what();
      if (e.line() >= 0) {
        r["line"] = e.line();
        r["col"] = e.col();
      }
      emit(r);
    } else {
      std::cerr << "error [" << errc_name(e.code()) << "]";
      if (e.line() >= 0) std::cerr << " at line " << e.line() << ", col " << e.col();
      std::cerr << ": " << e.what() << "\n";
    }
    return is_hypothesis_failure(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
