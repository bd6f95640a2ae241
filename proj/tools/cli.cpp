#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "conjunct/alignment.hpp"
#include "conjunct/catalog.hpp"
#include "conjunct/coords.hpp"
#include "conjunct/kinematics.hpp"
#include "conjunct/oracle.hpp"
#include "conjunct/series.hpp"
#include "conjunct/svg.hpp"
#include "conjunct/text.hpp"

namespace conjunct::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { table, csv, jsonl, svg };

const std::map<std::string, Format> kFormats = {
    {"table", Format::table}, {"csv", Format::csv}, {"jsonl", Format::jsonl}, {"svg", Format::svg}};

constexpr const char* kAdvanceNote =
    "Longitude step: the classic great-conjunction table advances 245.56 degrees per event, "
    "but evaluating (360/29.46)*19.85 directly gives 242.57 degrees. Use --advance 245.56 to "
    "reproduce the table, or --slow-period 29.46 to derive the step from the formula. With the "
    "245.56 step, k=22 returns to within 2.32 degrees of C_0 (usually quoted as 2.31, a rounding "
    "difference) and k=66 to within 6.96 degrees; the often-quoted \"6.96 years\" for k=66 is a "
    "unit slip for degrees.";

struct Options {
  std::string format;
  std::string catalog = "coarse";
  std::string bodies_file;
  std::string units = "years";
  int precision = 2;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format resolve_format(const std::string& flag) {
  std::string name = flag;
  if (name.empty()) {
    const char* env = std::getenv(kFormatEnv);
    name = env && *env ? env : "table";
  }
  auto it = kFormats.find(name);
  if (it == kFormats.end()) throw UsageError("unknown output format '" + name + "'");
  return it->second;
}

std::string units_label(TimeUnit u) { return std::string(to_string(u)); }

double parse_real(const std::string& text) { return Ratio::parse(text).to_double(); }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(sep) : "") + parts[i];
  return out;
}

std::vector<Body> resolve_bodies(const std::vector<std::string>& tokens, const Options& opt) {
  const Catalog& catalog = builtin_catalog(opt.catalog);
  std::vector<Body> from_file;
  if (!opt.bodies_file.empty()) {
    std::ifstream in(opt.bodies_file);
    if (!in) throw UsageError("cannot open body file '" + opt.bodies_file + "'");
    from_file = read_body_file(in);
  }
  std::vector<Body> out;
  for (const auto& token : tokens) {
    if (auto eq = token.find('='); eq != std::string::npos) {
      out.push_back(Body::make(token.substr(0, eq), Ratio::parse(token.substr(eq + 1)),
                               parse_time_unit(opt.units)));
      continue;
    }
    auto match = std::find_if(from_file.begin(), from_file.end(),
                              [&](const Body& b) { return b.name == token; });
    if (match != from_file.end()) {
      out.push_back(*match);
    } else if (auto b = catalog.find(token)) {
      out.push_back(*b);
    } else {
      throw UsageError("unknown body '" + token + "' in catalog '" + catalog.name +
                       "' (available: " + join(catalog.names(), ", ") + ")");
    }
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// ---------------------------------------------------------------------------

void cmd_synodic(const std::vector<std::string>& names, const Options& opt, Format fmt,
                 std::ostream& out) {
  const auto bodies = resolve_bodies(names, opt);
  const Body& a = bodies[0];
  const Body& b = bodies[1];
  const Ratio s = synodic_period(a, b);
  const Body& slow = a.period < b.period ? b : a;
  const Angle advance = advance_angle(slow.period, s);
  const std::string units = units_label(a.units);

  switch (fmt) {
    case Format::table:
      out << "pair     " << a.name << " (" << a.period << ") - " << b.name << " (" << b.period << ")\n"
          << "exact    " << s << "\n"
          << "decimal  " << fixed(s.to_double(), opt.precision) << " " << units << "\n"
          << "advance  " << advance.exact() << " deg (" << advance.format(opt.precision)
          << " deg of " << slow.name << " per conjunction)\n";
      break;
    case Format::csv:
      out << "a,b,synodic_exact,synodic_decimal,units,advance_exact,advance_deg\n"
          << a.name << ',' << b.name << ',' << s << ',' << fixed(s.to_double(), opt.precision) << ','
          << units << ',' << advance.exact() << ',' << advance.format(opt.precision) << '\n';
      break;
    case Format::jsonl: {
      ordered_json j;
      j["a"] = a.name;
      j["b"] = b.name;
      j["synodic_exact"] = s.str();
      j["synodic"] = s.to_double();
      j["units"] = units;
      j["advance_exact"] = advance.exact().str();
      j["advance_deg"] = advance.degrees();
      out << j.dump() << '\n';
      break;
    }
    case Format::svg:
      throw UsageError("svg output is only available for series and trigon");
  }
}

struct SeriesArgs {
  std::string advance;
  std::string slow_period;
  std::string synodic;
  std::string radius = "1";
  std::string epoch = "0";
  std::size_t count = 9;

  SeriesParams params() const {
    SeriesParams p;
    p.synodic = parse_real(synodic);
    if (!advance.empty() && !slow_period.empty()) {
      throw UsageError("give either --advance or --slow-period, not both");
    }
    if (advance.empty() && slow_period.empty()) {
      throw UsageError("one of --advance or --slow-period is required");
    }
    p.advance = advance.empty() ? conjunct::advance_angle(parse_real(slow_period), p.synodic)
                                : parse_real(advance);
    p.radius = parse_real(radius);
    p.epoch_longitude = parse_real(epoch);
    return p;
  }
};

void add_series_options(CLI::App* sub, SeriesArgs& a) {
  sub->add_option("--advance", a.advance, "longitude step between conjunctions, degrees");
  sub->add_option("--slow-period", a.slow_period,
                  "derive the step as (360/slow-period)*synodic instead of --advance");
  sub->add_option("--synodic", a.synodic, "time between conjunctions, years")->required();
  sub->add_option("--radius", a.radius, "plane radius")->capture_default_str();
  sub->add_option("--epoch", a.epoch, "longitude of C_0, degrees")->capture_default_str();
}

void cmd_series(const SeriesArgs& args, const Options& opt, Format fmt, std::ostream& out) {
  const SeriesParams p = args.params();
  if (fmt == Format::svg) {
    out << render_trigon_svg(p, args.count);
    return;
  }
  const auto events = generate_series(p, args.count);
  const int prec = opt.precision;
  switch (fmt) {
    case Format::table:
      out << "advance " << fixed(p.advance, prec) << " deg, synodic " << fixed(p.synodic, prec) << " years\n";
      out << pad("C_n", 6) << lpad("longitude_deg", 14) << lpad("elapsed_years", 15) << lpad("family", 8) << '\n';
      for (const auto& e : events) {
        out << pad("C_" + std::to_string(e.index), 6) << lpad(fixed(e.longitude, prec), 14)
            << lpad(fixed(e.elapsed, prec), 15) << lpad(std::to_string(e.family), 8) << '\n';
      }
      break;
    case Format::csv:
      out << "n,elapsed_years,longitude_deg,family\n";
      for (const auto& e : events) {
        out << e.index << ',' << fixed(e.elapsed, prec) << ',' << fixed(e.longitude, prec) << ','
            << e.family << '\n';
      }
      break;
    case Format::jsonl:
      for (const auto& e : events) {
        ordered_json j;
        j["n"] = e.index;
        j["elapsed_years"] = e.elapsed;
        j["longitude_deg"] = e.longitude;
        j["family"] = e.family;
        out << j.dump() << '\n';
      }
      break;
    case Format::svg:
      break;
  }
}

void cmd_trigon(const SeriesArgs& args, const Options& opt, Format fmt, std::ostream& out) {
  const SeriesParams p = args.params();
  if (fmt == Format::svg) {
    out << render_trigon_svg(p, args.count);
    return;
  }
  const auto events = generate_series(p, args.count);
  const auto points = trigon_points(p, args.count);
  const int prec = std::max(opt.precision, 4);
  switch (fmt) {
    case Format::table:
      out << pad("C_n", 6) << lpad("x", 12) << lpad("y", 12) << lpad("family", 8) << '\n';
      for (std::size_t n = 0; n < points.size(); ++n) {
        out << pad("C_" + std::to_string(n), 6) << lpad(fixed(points[n].x, prec), 12)
            << lpad(fixed(points[n].y, prec), 12) << lpad(std::to_string(events[n].family), 8) << '\n';
      }
      break;
    case Format::csv:
      out << "n,x,y,family\n";
      for (std::size_t n = 0; n < points.size(); ++n) {
        out << n << ',' << fixed(points[n].x, prec) << ',' << fixed(points[n].y, prec) << ','
            << events[n].family << '\n';
      }
      break;
    case Format::jsonl:
      for (std::size_t n = 0; n < points.size(); ++n) {
        ordered_json j;
        j["n"] = n;
        j["x"] = points[n].x;
        j["y"] = points[n].y;
        j["family"] = events[n].family;
        out << j.dump() << '\n';
      }
      break;
    case Format::svg:
      break;
  }
}

struct CycleArgs {
  SeriesArgs series;
  std::size_t k_max = 66;
  std::string ang_tol = "0";
  std::string time_tol = "0";
};

void cmd_cycles(const CycleArgs& args, const Options& opt, Format fmt, std::ostream& out) {
  const SeriesParams p = args.series.params();
  const auto found = cycle_search(p, args.k_max, parse_real(args.ang_tol), parse_real(args.time_tol));
  const int prec = opt.precision;
  auto flags = [](const CycleCandidate& c) {
    std::vector<std::string> f;
    if (c.angular_record) f.emplace_back("angle-record");
    if (c.time_record) f.emplace_back("time-record");
    if (c.within_tolerance) f.emplace_back("within-tol");
    return f;
  };
  auto direction = [](const CycleCandidate& c) {
    return c.signed_offset > 0.0 ? "east" : c.signed_offset < 0.0 ? "west" : "-";
  };
  switch (fmt) {
    case Format::table:
      out << lpad("k", 5) << lpad("offset_deg", 12) << lpad("dir", 6) << lpad("years", 12)
          << lpad("year_offset", 13) << "  flags\n";
      for (const auto& c : found) {
        out << lpad(std::to_string(c.k), 5) << lpad(fixed(c.angular_offset, prec), 12)
            << lpad(direction(c), 6) << lpad(fixed(c.total_years, prec), 12)
            << lpad(fixed(c.time_offset, prec), 13) << "  " << join(flags(c), ",") << '\n';
      }
      break;
    case Format::csv:
      out << "k,angular_offset_deg,direction,total_years,time_offset_years,angular_record,time_record,"
             "within_tolerance\n";
      for (const auto& c : found) {
        out << c.k << ',' << fixed(c.angular_offset, prec) << ',' << direction(c) << ','
            << fixed(c.total_years, prec) << ',' << fixed(c.time_offset, prec) << ','
            << (c.angular_record ? 1 : 0) << ',' << (c.time_record ? 1 : 0) << ','
            << (c.within_tolerance ? 1 : 0) << '\n';
      }
      break;
    case Format::jsonl:
      for (const auto& c : found) {
        ordered_json j;
        j["k"] = c.k;
        j["angular_offset_deg"] = c.angular_offset;
        j["signed_offset_deg"] = c.signed_offset;
        j["total_years"] = c.total_years;
        j["time_offset_years"] = c.time_offset;
        j["angular_record"] = c.angular_record;
        j["time_record"] = c.time_record;
        j["within_tolerance"] = c.within_tolerance;
        out << j.dump() << '\n';
      }
      break;
    case Format::svg:
      throw UsageError("svg output is only available for series and trigon");
  }
}

void print_alignment(const AlignmentReport& r, const Options& opt, Format fmt, std::ostream& out) {
  const std::string units = units_label(r.bodies.front().units);
  switch (fmt) {
    case Format::table: {
      std::size_t width = 6;
      for (const auto& p : r.pairwise) width = std::max(width, p.label.size() + 2);
      out << pad("pair", width) << pad("exact", 14) << "decimal\n";
      for (const auto& p : r.pairwise) {
        out << pad(p.label, width) << pad(p.synodic.str(), 14) << fixed(p.synodic.to_double(), opt.precision)
            << ' ' << units << '\n';
      }
      out << "alignment period: " << r.period << ' ' << units << " (" << fixed(r.period.to_double(), opt.precision)
          << ")\n";
      break;
    }
    case Format::csv:
      out << "pair,synodic_exact,synodic_decimal,units\n";
      for (const auto& p : r.pairwise) {
        out << p.label << ',' << p.synodic << ',' << fixed(p.synodic.to_double(), opt.precision) << ','
            << units << '\n';
      }
      out << "alignment," << r.period << ',' << fixed(r.period.to_double(), opt.precision) << ',' << units
          << '\n';
      break;
    case Format::jsonl: {
      for (const auto& p : r.pairwise) {
        ordered_json j;
        j["pair"] = p.label;
        j["synodic_exact"] = p.synodic.str();
        j["synodic"] = p.synodic.to_double();
        j["units"] = units;
        out << j.dump() << '\n';
      }
      ordered_json j;
      j["alignment_exact"] = r.period.str();
      j["alignment"] = r.period.to_double();
      j["units"] = units;
      out << j.dump() << '\n';
      break;
    }
    case Format::svg:
      throw UsageError("svg output is only available for series and trigon");
  }
}

void cmd_align(const std::vector<std::string>& names, const Options& opt, Format fmt, std::ostream& out) {
  const auto bodies = resolve_bodies(names, opt);
  print_alignment(alignment_period(bodies), opt, fmt, out);
}

void cmd_clock(const Options& opt, Format fmt, std::ostream& out) {
  if (fmt != Format::table && fmt != Format::jsonl) {
    throw UsageError("clock supports table and jsonl output");
  }
  const Catalog& clock = builtin_catalog("clock");
  const Body second = *clock.find("second");
  const Body minute = *clock.find("minute");
  const Body hour = *clock.find("hour");

  const Ratio hm = synodic_period(minute, hour);
  const Ratio sm = synodic_period(second, minute);
  const std::vector<Body> hands = {second, minute, hour};
  const AlignmentReport triple = alignment_period(hands);

  // Vertices of the hour/minute conjunction polygon over one 12 h face.
  std::vector<std::pair<Ratio, Angle>> vertices;
  for (Ratio t = hm; t <= hour.period; t += hm) vertices.emplace_back(t, position(hour, t));

  if (fmt == Format::jsonl) {
    ordered_json j;
    j["minute_hour_synodic_exact"] = hm.str();
    j["second_minute_synodic_exact"] = sm.str();
    j["triple_exact"] = triple.period.str();
    j["conjunctions_per_12h"] = vertices.size();
    out << j.dump() << '\n';
    for (const auto& [t, a] : vertices) {
      ordered_json v;
      v["t_exact"] = t.str();
      v["t_hours"] = t.to_double();
      v["angle_exact"] = a.exact().str();
      v["angle_deg"] = a.degrees();
      out << v.dump() << '\n';
    }
    return;
  }

  out << "minute-hour conjunction every " << hm << " h (" << fixed(hm.to_double(), 4) << " h)\n"
      << "conjunctions in 12 h: " << vertices.size() << " (regular " << vertices.size() << "-gon, step "
      << advance_angle(hour.period, hm).exact() << " deg)\n";
  out << lpad("k", 4) << lpad("t_exact", 10) << lpad("t_hours", 10) << lpad("angle_exact", 13)
      << lpad("angle_deg", 11) << '\n';
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const auto& [t, a] = vertices[k];
    out << lpad(std::to_string(k + 1), 4) << lpad(t.str(), 10) << lpad(fixed(t.to_double(), 4), 10)
        << lpad(a.exact().str(), 13) << lpad(a.format(opt.precision), 11) << '\n';
  }
  out << "second-minute conjunction every " << sm << " h\n";
  out << "all three hands: every " << triple.period << " h\n";
}

struct CoordArgs {
  std::string from = "ecl";
  std::string lon, lat, ra, dec;
  std::string obliquity = "23.4";
};

double parse_angle_arg(const std::string& text, SexagesimalKind kind) {
  const bool sexagesimal = text.find_first_of("hms'\"d\xC2\xE2") != std::string::npos;
  return sexagesimal ? parse_sexagesimal(text, kind) : parse_real(text);
}

void cmd_coords(const CoordArgs& a, const Options& opt, Format fmt, std::ostream& out) {
  const Obliquity phi(parse_real(a.obliquity));
  EclipticCoord ecl;
  EquatorialCoord eq;
  if (a.from == "ecl") {
    if (a.lon.empty() || a.lat.empty()) throw UsageError("--from ecl needs --lon and --lat");
    ecl = {parse_angle_arg(a.lon, SexagesimalKind::degrees), parse_angle_arg(a.lat, SexagesimalKind::degrees)};
    eq = ecl_to_eq(ecl, phi);
  } else if (a.from == "eq") {
    if (a.ra.empty() || a.dec.empty()) throw UsageError("--from eq needs --ra and --dec");
    eq = {parse_angle_arg(a.ra, SexagesimalKind::hours), parse_angle_arg(a.dec, SexagesimalKind::degrees)};
    ecl = eq_to_ecl(eq, phi);
  } else {
    throw UsageError("--from must be ecl or eq");
  }
  const int prec = std::max(opt.precision, 6);
  switch (fmt) {
    case Format::table:
      out << "obliquity        " << fixed(phi.degrees(), prec) << " deg\n"
          << "ecliptic lon     " << fixed(ecl.longitude, prec) << " deg  "
          << format_sexagesimal(ecl.longitude, SexagesimalKind::degrees) << (ecl.polar ? "  (pole)" : "") << '\n'
          << "ecliptic lat     " << fixed(ecl.latitude, prec) << " deg  "
          << format_sexagesimal(ecl.latitude, SexagesimalKind::degrees) << '\n'
          << "right ascension  " << fixed(eq.right_ascension, prec) << " h    "
          << format_sexagesimal(eq.right_ascension, SexagesimalKind::hours) << (eq.polar ? "  (pole)" : "") << '\n'
          << "declination      " << fixed(eq.declination, prec) << " deg  "
          << format_sexagesimal(eq.declination, SexagesimalKind::degrees) << '\n';
      break;
    case Format::csv:
      out << "ecl_lon_deg,ecl_lat_deg,ra_hours,dec_deg,polar\n"
          << fixed(ecl.longitude, prec) << ',' << fixed(ecl.latitude, prec) << ','
          << fixed(eq.right_ascension, prec) << ',' << fixed(eq.declination, prec) << ','
          << ((ecl.polar || eq.polar) ? 1 : 0) << '\n';
      break;
    case Format::jsonl: {
      ordered_json j;
      j["ecl_lon_deg"] = ecl.longitude;
      j["ecl_lat_deg"] = ecl.latitude;
      j["ra_hours"] = eq.right_ascension;
      j["dec_deg"] = eq.declination;
      j["polar"] = ecl.polar || eq.polar;
      out << j.dump() << '\n';
      break;
    }
    case Format::svg:
      throw UsageError("svg output is only available for series and trigon");
  }
}

struct OracleArgs {
  std::vector<std::string> bodies;
  bool align = false;
  std::string dt;
  std::string t_end;
  std::string tol = "1e-9";
  std::string ang_tol = "0.01";
};

void cmd_oracle(const OracleArgs& a, const Options& opt, Format fmt, std::ostream& out) {
  if (fmt == Format::svg) throw UsageError("svg output is only available for series and trigon");
  const auto bodies = resolve_bodies(a.bodies, opt);
  const double t_end = parse_real(a.t_end);
  // 1e-9 style tolerances are not rational literals; read them as plain doubles.
  const double refine_tol = std::stod(a.tol);
  const bool align = a.align || bodies.size() > 2;
  SimConfig cfg = align ? default_alignment_config(bodies, t_end, refine_tol)
                        : default_pair_config(bodies[0], bodies[1], t_end, refine_tol);
  if (!a.dt.empty()) cfg.dt = parse_real(a.dt);
  const int prec = std::max(opt.precision, 9);
  const std::string units = units_label(bodies.front().units);

  if (align) {
    const auto t = detect_alignment(bodies, parse_real(a.ang_tol), cfg);
    if (fmt == Format::jsonl) {
      ordered_json j;
      j["alignment"] = t ? ordered_json(*t) : ordered_json(nullptr);
      j["units"] = units;
      out << j.dump() << '\n';
    } else if (fmt == Format::csv) {
      out << "alignment,units\n" << (t ? fixed(*t, prec) : "none") << ',' << units << '\n';
    } else {
      out << "first alignment: " << (t ? fixed(*t, prec) + " " + units : "none found") << '\n';
    }
    return;
  }

  const auto events = detect_pair_conjunctions(bodies[0], bodies[1], cfg);
  switch (fmt) {
    case Format::table:
      out << events.size() << " conjunctions of " << bodies[0].name << " and " << bodies[1].name
          << " in (0, " << shortest(t_end) << "] " << units << '\n';
      for (std::size_t i = 0; i < events.size(); ++i) {
        out << lpad(std::to_string(i + 1), 5) << "  " << fixed(events[i], prec) << '\n';
      }
      break;
    case Format::csv:
      out << "k,time\n";
      for (std::size_t i = 0; i < events.size(); ++i) out << i + 1 << ',' << fixed(events[i], prec) << '\n';
      break;
    case Format::jsonl:
      for (std::size_t i = 0; i < events.size(); ++i) {
        ordered_json j;
        j["k"] = i + 1;
        j["time"] = events[i];
        out << j.dump() << '\n';
      }
      break;
    case Format::svg:
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjunctions of uniformly revolving bodies, computed exactly.", "conjunct"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format,
                 std::string("table|csv|jsonl|svg (default from $") + kFormatEnv + ", else table)")
      ->check(CLI::IsMember({"table", "csv", "jsonl", "svg"}));
  app.add_option("--catalog", opt.catalog, "period set: clock|coarse|refined|alt")->capture_default_str();
  app.add_option("--bodies", opt.bodies_file, "body file, one 'name period units' per line");
  app.add_option("--units", opt.units, "units for inline NAME=PERIOD bodies")->capture_default_str();
  app.add_option("--precision", opt.precision, "decimal places in formatted output")->capture_default_str();
  app.fallthrough();

  std::vector<std::string> synodic_names;
  auto* synodic = app.add_subcommand("synodic", "synodic period of two bodies");
  synodic->add_option("bodies", synodic_names, "two body names (or NAME=PERIOD)")->required()->expected(2);

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "conjunction events C_0..C_{count-1}");
  add_series_options(series, series_args);
  series->add_option("--count", series_args.count, "number of events")->capture_default_str();
  series->footer(kAdvanceNote);

  SeriesArgs trigon_args;
  auto* trigon = app.add_subcommand("trigon", "plane points r*exp(i*longitude) of the series");
  add_series_options(trigon, trigon_args);
  trigon->add_option("--count", trigon_args.count, "number of events")->capture_default_str();
  trigon->footer(kAdvanceNote);

  CycleArgs cycle_args;
  auto* cycles = app.add_subcommand("cycles", "search cycle lengths k that resynchronize longitude and calendar");
  add_series_options(cycles, cycle_args.series);
  cycles->add_option("--kmax", cycle_args.k_max, "largest k to score")->capture_default_str();
  cycles->add_option("--ang-tol", cycle_args.ang_tol, "report every k with offset <= this, degrees")
      ->capture_default_str();
  cycles->add_option("--time-tol", cycle_args.time_tol, "and k*synodic within this of a whole year")
      ->capture_default_str();
  cycles->footer(kAdvanceNote);

  std::vector<std::string> align_names;
  auto* align = app.add_subcommand("align", "period of simultaneous conjunction of all bodies");
  align->add_option("bodies", align_names, "two or more body names")->required()->expected(2, -1);

  auto* clock = app.add_subcommand("clock", "hour, minute and second hands of a 12 h clock");

  CoordArgs coord_args;
  auto* coords = app.add_subcommand("coords", "convert between ecliptic and equatorial coordinates");
  coords->add_option("--from", coord_args.from, "ecl|eq")->capture_default_str();
  coords->add_option("--lon", coord_args.lon, "ecliptic longitude, degrees or D° M′ S″");
  coords->add_option("--lat", coord_args.lat, "ecliptic latitude, degrees");
  coords->add_option("--ra", coord_args.ra, "right ascension, hours or Hh Mm Ss");
  coords->add_option("--dec", coord_args.dec, "declination, degrees");
  coords->add_option("--obliquity", coord_args.obliquity, "degrees")->capture_default_str();

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "brute-force simulation of conjunctions");
  oracle->add_option("bodies", oracle_args.bodies, "two bodies (pair events) or more (alignment)")
      ->required()
      ->expected(2, -1);
  oracle->add_flag("--align", oracle_args.align, "search for alignment even with two bodies");
  oracle->add_option("--dt", oracle_args.dt, "time step (default S/100)");
  oracle->add_option("--t-end", oracle_args.t_end, "simulation horizon")->required();
  oracle->add_option("--tol", oracle_args.tol, "bisection time tolerance")->capture_default_str();
  oracle->add_option("--ang-tol", oracle_args.ang_tol, "alignment tolerance, degrees")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    const Format fmt = resolve_format(opt.format);
    if (fmt == Format::svg && !series->parsed() && !trigon->parsed()) {
      throw UsageError("svg output is only available for series and trigon");
    }
    if (synodic->parsed()) cmd_synodic(synodic_names, opt, fmt, out);
    if (series->parsed()) cmd_series(series_args, opt, fmt, out);
    if (trigon->parsed()) cmd_trigon(trigon_args, opt, fmt, out);
    if (cycles->parsed()) cmd_cycles(cycle_args, opt, fmt, out);
    if (align->parsed()) cmd_align(align_names, opt, fmt, out);
    if (clock->parsed()) cmd_clock(opt, fmt, out);
    if (coords->parsed()) cmd_coords(coord_args, opt, fmt, out);
    if (oracle->parsed()) cmd_oracle(oracle_args, opt, fmt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid number: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace conjunct::cli
