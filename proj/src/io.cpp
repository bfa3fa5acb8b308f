// SPDX-License-Identifier: Apache-2.0
#include "selfsim/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "selfsim/error.hpp"

namespace selfsim
{

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace
{

Number number_from_json(const json &v, const char *field)
{
  if (v.is_number_integer())
    return v.is_number_unsigned() ? Number(mpq_class(std::to_string(v.get<std::uint64_t>())))
                                  : Number(mpq_class(std::to_string(v.get<std::int64_t>())));
  if (v.is_number_float())
    return Number(v.get<double>());
  if (v.is_string())
  {
    try
    {
      return Number::parse(v.get<std::string>());
    }
    catch (const Error &e)
    {
      throw Error(ErrorCode::SchemaError, std::string(field) + ": " + e.what());
    }
  }
  throw Error(ErrorCode::SchemaError, std::string(field) + ": expected a number or a numeric string");
}

std::vector<Number> number_list(const json &doc, const char *field)
{
  if (!doc.contains(field))
    throw Error(ErrorCode::SchemaError, std::string("missing field \"") + field + "\"");
  const json &arr = doc.at(field);
  if (!arr.is_array())
    throw Error(ErrorCode::SchemaError, std::string("\"") + field + "\" must be an array");
  std::vector<Number> out;
  for (const auto &v : arr)
    out.push_back(number_from_json(v, field));
  return out;
}

json number_to_json(const Number &x)
{
  if (!x.is_exact())
    return x.to_double();
  const mpq_class &q = x.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return q.get_num().get_si();
  return x.to_string();
}

// Shortest round-trip form, so reports are byte-stable.
std::string fmt(double v)
{
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string dump(const ordered &doc) { return doc.dump(2) + "\n"; }

}  // namespace

RawParams parse_params(std::string_view json_text)
{
  json doc;
  try
  {
    doc = json::parse(json_text.begin(), json_text.end());
  }
  catch (const json::parse_error &e)
  {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object())
    throw Error(ErrorCode::SchemaError, "parameter document must be a JSON object");
  for (const auto &item : doc.items())
  {
    const auto &key = item.key();
    if (key != "n" && key != "a" && key != "d" && key != "beta" && key != "orient")
      throw Error(ErrorCode::SchemaError, "unknown field \"" + key + "\"");
  }

  RawParams raw;
  raw.a = number_list(doc, "a");
  raw.d = number_list(doc, "d");
  raw.beta = number_list(doc, "beta");
  if (doc.contains("orient"))
  {
    if (!doc["orient"].is_array())
      throw Error(ErrorCode::SchemaError, "\"orient\" must be an array of booleans");
    for (const auto &v : doc["orient"])
    {
      if (!v.is_boolean())
        throw Error(ErrorCode::SchemaError, "\"orient\" must be an array of booleans");
      raw.orient.push_back(v.get<bool>());
    }
  }
  if (doc.contains("n"))
  {
    const json &n = doc["n"];
    if (!n.is_number_integer())
      throw Error(ErrorCode::SchemaError, "\"n\" must be an integer");
    if (n.get<std::int64_t>() != static_cast<std::int64_t>(raw.a.size()))
      throw Error(ErrorCode::SchemaError, "\"n\" = " + n.dump() + " but \"a\" has " +
                                              std::to_string(raw.a.size()) + " entries");
  }
  return raw;
}

RawParams load_params(const std::filesystem::path &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_params(text.str());
}

std::string params_to_json(const SimilarityParams &params)
{
  ordered doc;
  doc["n"] = params.n();
  for (const char *field : {"a", "d", "beta"})
  {
    auto values = field[0] == 'a' ? params.a() : field[0] == 'd' ? params.d() : params.beta();
    json arr = json::array();
    for (const auto &v : values)
      arr.push_back(number_to_json(v));
    doc[field] = arr;
  }
  doc["orient"] = params.orient();
  return dump(doc);
}

std::string step_function_csv(const StepFunction &f)
{
  std::ostringstream out;
  out << "x_left,x_right,value\n";
  for (const auto &p : f.pieces())
    out << p.left << ',' << p.right << ',' << p.value << '\n';
  return out.str();
}

std::string string_csv(const StieltjesString &s)
{
  std::ostringstream out;
  out << "position,mass\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << s.positions()[i] << ',' << s.masses()[i] << '\n';
  return out.str();
}

std::string spectrum_csv(const SpectrumResult &s)
{
  std::ostringstream out;
  out << "index,re,im,abs,residual\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
  {
    const auto z = s.eigenvalues[i];
    out << i + 1 << ',' << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(std::abs(z)) << ','
        << fmt(s.residuals[i]) << '\n';
  }
  return out.str();
}

std::string validation_report_json(const SimilarityParams &params)
{
  ordered doc;
  doc["schema_version"] = "1";
  doc["valid"] = true;
  doc["n"] = params.n();
  doc["exact"] = params.is_exact();
  json warnings = json::array();
  for (auto w : params.warnings())
    warnings.push_back(warning_name(w));
  doc["warnings"] = warnings;
  const ClassLabel cls = classify_class(params);
  doc["class"] = class_name(cls.kind);
  if (cls.kind == ClassLabel::Kind::D1)
    doc["khat"] = cls.khat + 1;
  ordered norms;
  norms["1"] = number_to_json(contraction_norm(params, 1.0));
  norms["2"] = number_to_json(contraction_norm(params, 2.0));
  norms["inf"] = number_to_json(contraction_norm(params, std::numeric_limits<double>::infinity()));
  doc["contraction_norm"] = norms;
  return dump(doc);
}

std::string singular_report_json(const SingularPointReport &report)
{
  ordered doc;
  doc["schema_version"] = "1";
  doc["xhat"] = report.xhat.to_double();
  doc["xhat_exact"] = report.xhat.to_string();
  doc["case"] = case_name(report.case_label);
  doc["kind"] = behavior_name(report.kind);
  if (const auto *lim = std::get_if<FiniteLimit>(&report.kind))
    doc["limit"] = number_to_json(lim->value);
  else if (const auto *jump = std::get_if<Jump1stKind>(&report.kind))
  {
    doc["left"] = number_to_json(jump->left);
    doc["right"] = number_to_json(jump->right);
  }
  else if (const auto *inf = std::get_if<InfiniteLimit>(&report.kind))
    doc["limit"] = inf->sign > 0 ? "+inf" : "-inf";
  if (report.left_limit)
    doc["left"] = number_to_json(*report.left_limit);
  if (report.right_limit)
    doc["right"] = number_to_json(*report.right_limit);
  return dump(doc);
}

std::string monotone_report_json(const MonotonicityVerdict &nondecreasing,
                                 const MonotonicityVerdict &nonincreasing)
{
  auto verdict = [](const MonotonicityVerdict &v) {
    ordered out;
    out["holds"] = v.holds;
    if (v.witness)
    {
      ordered w;
      w["inequality"] = v.witness->inequality;
      w["lhs"] = number_to_json(v.witness->lhs);
      w["rhs"] = number_to_json(v.witness->rhs);
      out["witness"] = w;
    }
    return out;
  };
  ordered doc;
  doc["schema_version"] = "1";
  doc["nondecreasing"] = verdict(nondecreasing);
  doc["nonincreasing"] = verdict(nonincreasing);
  return dump(doc);
}

std::string order_json(const SpectralOrderResult &result)
{
  ordered doc;
  doc["schema_version"] = "1";
  doc["class"] = class_name(result.cls.kind);
  if (result.order)
    doc["D"] = *result.order;
  else
    doc["D"] = "undefined";
  return dump(doc);
}

std::string growth_json(const GrowthFit &fit, std::size_t skip, unsigned m)
{
  ordered doc;
  doc["schema_version"] = "1";
  doc["m"] = m;
  doc["skip"] = skip;
  doc["slope"] = fit.slope;
  doc["intercept"] = fit.intercept;
  doc["r_squared"] = fit.r_squared;
  return dump(doc);
}

}  // namespace selfsim
