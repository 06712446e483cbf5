#include "arbopack/arbopack.h"

#include <string>

#include "arbopack/errors.hpp"
#include "arbopack/io.hpp"
#include "arbopack/pack.hpp"
#include "arbopack/pieo.hpp"
#include "arbopack/verify.hpp"

struct arbopack_instance {
  arbopack::Instance instance;
};

struct arbopack_result {
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

arbopack_result* make_result(const arbopack::Json& doc, std::string text) {
  return new arbopack_result{doc.dump(2) + "\n", std::move(text)};
}

arbopack_status fail(arbopack_status status, const char* kind, const std::string& message,
                     const std::string& diagnostics, arbopack_result** out) {
  last_error = message;
  if (out) {
    arbopack::Json doc{{"error", message}, {"kind", kind}};
    std::string text = std::string(kind) + " error: " + message + "\n";
    if (!diagnostics.empty()) {
      doc["diagnostics"] = diagnostics;
      text += diagnostics;
    }
    try {
      *out = make_result(doc, std::move(text));
    } catch (...) {
      *out = nullptr;
    }
  }
  return status;
}

/// Runs `body`, translating library exceptions into status codes.
template <class Body>
arbopack_status guarded(arbopack_result** out, Body&& body) {
  if (out) *out = nullptr;
  try {
    last_error.clear();
    return body();
  } catch (const arbopack::InternalError& e) {
    return fail(ARBOPACK_ERR_INTERNAL, "internal", e.what(), e.diagnostics(), out);
  } catch (const arbopack::CapacityError& e) {
    return fail(ARBOPACK_ERR_CAPACITY, "capacity", e.what(), {}, out);
  } catch (const arbopack::Error& e) {
    return fail(ARBOPACK_ERR_INPUT, "input", e.what(), {}, out);
  } catch (const std::exception& e) {
    return fail(ARBOPACK_ERR_INTERNAL, "internal", e.what(), {}, out);
  } catch (...) {
    return fail(ARBOPACK_ERR_INTERNAL, "internal", "unknown exception", {}, out);
  }
}

struct Resolved {
  std::size_t limit;
  std::optional<bool> paranoid;
  bool trace;
};

Resolved resolve(const arbopack_options* options) {
  arbopack_options o;
  arbopack_options_init(&o);
  if (options) o = *options;
  Resolved r{o.max_n == 0 ? arbopack::kDefaultEnumerationLimit : o.max_n, std::nullopt, o.trace != 0};
  if (o.paranoid >= 0) r.paranoid = o.paranoid != 0;
  return r;
}

arbopack_status require(const void* p, arbopack_result** out) {
  return p ? ARBOPACK_OK : fail(ARBOPACK_ERR_INPUT, "input", "null argument", {}, out);
}

}  // namespace

extern "C" {

const char* arbopack_version(void) { return "1.0.0"; }

const char* arbopack_status_string(arbopack_status status) {
  switch (status) {
    case ARBOPACK_OK: return "ok";
    case ARBOPACK_NEGATIVE: return "negative";
    case ARBOPACK_ERR_INPUT: return "input error";
    case ARBOPACK_ERR_CAPACITY: return "capacity error";
    case ARBOPACK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* arbopack_last_error(void) { return last_error.c_str(); }

void arbopack_options_init(arbopack_options* options) {
  if (!options) return;
  options->max_n = 0;
  options->paranoid = -1;
  options->trace = 0;
}

arbopack_status arbopack_instance_load(const char* json, size_t length, arbopack_instance** out) {
  if (!out) return fail(ARBOPACK_ERR_INPUT, "input", "null output handle", {}, nullptr);
  *out = nullptr;
  if (!json) return fail(ARBOPACK_ERR_INPUT, "input", "null argument", {}, nullptr);
  return guarded(nullptr, [&] {
    *out = new arbopack_instance{arbopack::parse_instance(std::string_view(json, length))};
    return ARBOPACK_OK;
  });
}

void arbopack_instance_free(arbopack_instance* instance) { delete instance; }

size_t arbopack_instance_vertex_count(const arbopack_instance* instance) {
  return instance ? instance->instance.graph.vertex_count() : 0;
}

arbopack_status arbopack_check(const arbopack_instance* instance, const arbopack_options* options,
                               arbopack_result** out) {
  return guarded(out, [&] {
    if (auto s = require(instance, out)) return s;
    const auto opts = resolve(options);
    const auto& [g, b] = instance->instance;
    const auto report = arbopack::check_feasible(g, b, opts.limit);
    if (out) *out = make_result(arbopack::report_to_json(report, g), arbopack::report_to_text(report, g));
    return report.feasible ? ARBOPACK_OK : ARBOPACK_NEGATIVE;
  });
}

arbopack_status arbopack_solve(const arbopack_instance* instance, const arbopack_options* options,
                               arbopack_result** out) {
  return guarded(out, [&] {
    if (auto s = require(instance, out)) return s;
    const auto opts = resolve(options);
    const auto& [g, b] = instance->instance;
    arbopack::PackOptions pack_options;
    pack_options.limit = opts.limit;
    pack_options.paranoid = opts.paranoid;
    const auto outcome = arbopack::pack_mixed(g, b, pack_options);
    if (!outcome.packing) {
      if (out) *out = make_result(arbopack::report_to_json(outcome.report, g), arbopack::report_to_text(outcome.report, g));
      return ARBOPACK_NEGATIVE;
    }
    auto doc = arbopack::packing_to_json(*outcome.packing, g);
    std::string text = arbopack::packing_to_text(*outcome.packing, g);
    if (opts.trace) {
      doc["trace"] = arbopack::steps_to_json(outcome.orientation->steps, g);
      text += arbopack::describe_steps(g, outcome.orientation->steps);
    }
    if (out) *out = make_result(doc, std::move(text));
    return ARBOPACK_OK;
  });
}

arbopack_status arbopack_verify(const arbopack_instance* instance, const char* packing_json, size_t length,
                                arbopack_result** out) {
  return guarded(out, [&] {
    if (auto s = require(instance, out)) return s;
    if (auto s = require(packing_json, out)) return s;
    const auto& [g, b] = instance->instance;
    const auto packing = arbopack::parse_packing(std::string_view(packing_json, length), g);
    const auto report = arbopack::verify_packing(g, b, packing);
    if (out) *out = make_result(arbopack::verification_to_json(report, g), arbopack::verification_to_text(report, g));
    return report.ok() ? ARBOPACK_OK : ARBOPACK_NEGATIVE;
  });
}

arbopack_status arbopack_oracle(const arbopack_instance* instance, arbopack_result** out) {
  return guarded(out, [&] {
    if (auto s = require(instance, out)) return s;
    const auto& [g, b] = instance->instance;
    const auto result = arbopack::oracle_pack_exists(g, b);
    if (out) *out = make_result(arbopack::oracle_to_json(result, g), arbopack::oracle_to_text(result, g));
    return result.exists ? ARBOPACK_OK : ARBOPACK_NEGATIVE;
  });
}

arbopack_status arbopack_pieo_trace(const char* json, size_t length, arbopack_result** out) {
  return guarded(out, [&] {
    if (auto s = require(json, out)) return s;
    const auto request = arbopack::parse_pieo_request(std::string_view(json, length));
    arbopack::LaminarizeOptions options;
    options.order = request.order;
    options.seed = request.seed;
    const auto trace = arbopack::laminarize_type1(request.first, request.second, options);
    if (out) {
      *out = make_result(arbopack::trace_to_json(trace, request.ground), arbopack::trace_to_text(trace, request.ground));
    }
    return ARBOPACK_OK;
  });
}

const char* arbopack_result_json(const arbopack_result* result) { return result ? result->json.c_str() : ""; }

const char* arbopack_result_text(const arbopack_result* result) { return result ? result->text.c_str() : ""; }

void arbopack_result_free(arbopack_result* result) { delete result; }

}  // extern "C"
