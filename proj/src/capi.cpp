#include "macmahon/macmahon.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "macmahon/bases.hpp"
#include "macmahon/chromatic.hpp"
#include "macmahon/hopf.hpp"
#include "macmahon/recovery.hpp"
#include "macmahon/reports.hpp"

struct mm_graph {
  macmahon::WeightedGraph value;
};
struct mm_element {
  macmahon::MacMahonElement value;
};
struct mm_tensor {
  macmahon::TensorElement value;
};
struct mm_poly {
  macmahon::LaurentPolynomial value;
};
struct mm_beta {
  macmahon::BetaTable value;
};

namespace {

thread_local std::string last_error;

mm_status status_of(macmahon::Errc code) {
  using macmahon::Errc;
  switch (code) {
    case Errc::invalid_argument: return MM_ERR_INVALID_ARGUMENT;
    case Errc::parse: return MM_ERR_PARSE;
    case Errc::cap_exceeded: return MM_ERR_CAP;
    case Errc::inapplicable: return MM_ERR_INAPPLICABLE;
    case Errc::domain: return MM_ERR_DOMAIN;
    case Errc::overflow: return MM_ERR_OVERFLOW;
  }
  return MM_ERR_INTERNAL;
}

template <class F>
mm_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const macmahon::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return MM_ERR_INTERNAL;
}

mm_status null_argument() {
  last_error = "null argument";
  return MM_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

macmahon::Limits to_limits(const mm_limits* limits) {
  macmahon::Limits out;
  if (limits != nullptr) {
    out.max_edges = limits->max_edges;
    out.max_vertices = limits->max_vertices;
    out.max_colorings = limits->max_colorings;
  }
  return out;
}

template <class T, class V>
T* wrap(V&& value) {
  return new T{std::forward<V>(value)};
}

}  // namespace

extern "C" {

const char* mm_last_error(void) { return last_error.c_str(); }

const char* mm_status_name(mm_status status) {
  switch (status) {
    case MM_OK: return "ok";
    case MM_ERR_VERIFY: return "verification failed";
    case MM_ERR_PARSE: return "parse error";
    case MM_ERR_CAP: return "cap exceeded";
    case MM_ERR_INAPPLICABLE: return "inapplicable";
    case MM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MM_ERR_DOMAIN: return "domain error";
    case MM_ERR_OVERFLOW: return "overflow";
    case MM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void mm_string_free(char* s) { std::free(s); }

mm_limits mm_default_limits(void) {
  const macmahon::Limits d;
  return {d.max_edges, d.max_vertices, d.max_colorings};
}

mm_verify_options mm_default_verify_options(void) {
  const macmahon::VerifyOptions d;
  return {MM_VERIFY_EXHAUSTIVE, d.n_max, d.weight_max, d.r, d.seed, d.trials, mm_default_limits(), 0};
}

mm_status mm_graph_parse(const char* text, mm_graph** out) {
  if (text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_graph>(macmahon::parse_graph(text));
    return MM_OK;
  });
}

mm_status mm_graph_load(const char* path, mm_graph** out) {
  if (path == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_graph>(macmahon::load_graph(path));
    return MM_OK;
  });
}

mm_status mm_graph_random_forest(size_t n, int64_t max_weight, size_t r, uint64_t seed, mm_graph** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_graph>(macmahon::random_forest(n, max_weight, r, seed));
    return MM_OK;
  });
}

mm_status mm_graph_serialize(const mm_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(macmahon::serialize_graph(g->value));
    return MM_OK;
  });
}

size_t mm_graph_vertex_count(const mm_graph* g) { return g == nullptr ? 0 : g->value.vertex_count(); }
size_t mm_graph_edge_count(const mm_graph* g) { return g == nullptr ? 0 : g->value.edge_count(); }
size_t mm_graph_weight_dim(const mm_graph* g) { return g == nullptr ? 0 : g->value.weight_dim(); }
void mm_graph_free(mm_graph* g) { delete g; }

mm_status mm_cmf(const mm_graph* g, const mm_limits* limits, mm_element** out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_element>(macmahon::cmf(g->value, to_limits(limits)));
    return MM_OK;
  });
}

mm_status mm_egdp(const mm_graph* g, const mm_limits* limits, mm_poly** out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_poly>(macmahon::egdp(g->value, to_limits(limits)));
    return MM_OK;
  });
}

mm_status mm_beta_table(const mm_graph* g, const mm_limits* limits, mm_beta** out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    if (g->value.weight_dim() != 1)
      macmahon::fail(macmahon::Errc::inapplicable, "the beta table route is defined only for r = 1");
    *out = wrap<mm_beta>(macmahon::beta_table(g->value, to_limits(limits)));
    return MM_OK;
  });
}

mm_status mm_coloring_oracle(const mm_graph* g, unsigned k, const mm_limits* limits, mm_poly** out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_poly>(macmahon::coloring_oracle(g->value, k, to_limits(limits)));
    return MM_OK;
  });
}

mm_status mm_element_serialize(const mm_element* e, char** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(e->value.serialize());
    return MM_OK;
  });
}

size_t mm_element_width(const mm_element* e) { return e == nullptr ? 0 : e->value.width(); }

mm_status mm_element_equal(const mm_element* a, const mm_element* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = a->value == b->value ? 1 : 0;
    return MM_OK;
  });
}

mm_status mm_element_truncate(const mm_element* e, int k, mm_poly** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_poly>(macmahon::mac_truncate(e->value, k));
    return MM_OK;
  });
}

mm_status mm_element_specialize(const mm_element* e, mm_keep keep, mm_element** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    if (keep == MM_KEEP_WEIGHT && e->value.width() != 2)
      macmahon::fail(macmahon::Errc::inapplicable, "the weighted CSF is defined only for r = 1");
    const auto k = keep == MM_KEEP_WEIGHT ? macmahon::Keep::weight : macmahon::Keep::cardinality;
    *out = wrap<mm_element>(macmahon::csf_specialize(e->value, k));
    return MM_OK;
  });
}

mm_status mm_element_antipode(const mm_element* e, mm_element** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_element>(macmahon::antipode(e->value));
    return MM_OK;
  });
}

mm_status mm_element_coproduct(const mm_element* e, mm_tensor** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_tensor>(macmahon::coproduct(e->value));
    return MM_OK;
  });
}

mm_status mm_element_phi(const mm_element* e, mm_poly** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_poly>(macmahon::phi_symbolic(e->value));
    return MM_OK;
  });
}

mm_status mm_element_gamma(const mm_element* e, mm_poly** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_poly>(macmahon::gamma(e->value));
    return MM_OK;
  });
}

mm_status mm_element_recover_stats(const mm_element* e, mm_stats* out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto s = macmahon::recover_stats(e->value);
    if (s.weight.size() > MM_MAX_WEIGHT_DIM)
      macmahon::fail(macmahon::Errc::cap_exceeded, "weight dimension exceeds MM_MAX_WEIGHT_DIM");
    mm_stats r{};
    r.vertices = s.vertices;
    r.edges = s.edges;
    r.components = s.components;
    r.weight_dim = s.weight.size();
    for (size_t i = 0; i < s.weight.size(); ++i) r.weight[i] = s.weight[i];
    *out = r;
    return MM_OK;
  });
}

mm_status mm_element_recover_egdp(const mm_element* e, mm_poly** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_poly>(macmahon::recover_egdp_hopf(e->value));
    return MM_OK;
  });
}

void mm_element_free(mm_element* e) { delete e; }

mm_status mm_tensor_serialize(const mm_tensor* t, char** out) {
  if (t == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(t->value.serialize());
    return MM_OK;
  });
}

void mm_tensor_free(mm_tensor* t) { delete t; }

mm_status mm_poly_serialize(const mm_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(p->value.serialize());
    return MM_OK;
  });
}

mm_status mm_poly_specialize_gdp(const mm_poly* egdp, mm_gdp_kind kind, mm_poly** out) {
  if (egdp == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto k = kind == MM_GDP_WEIGHTED ? macmahon::GdpKind::weighted : macmahon::GdpKind::plain;
    *out = wrap<mm_poly>(macmahon::egdp_specialize(egdp->value, k));
    return MM_OK;
  });
}

mm_status mm_poly_coefficient(const mm_poly* p, const char* const* names, const int64_t* exponents, size_t count,
                              int64_t* out) {
  if (p == nullptr || out == nullptr || (count > 0 && (names == nullptr || exponents == nullptr)))
    return null_argument();
  return guarded([&] {
    std::map<std::string, std::int64_t> monomial;
    for (size_t i = 0; i < count; ++i) {
      if (names[i] == nullptr) macmahon::fail(macmahon::Errc::invalid_argument, "null variable name");
      monomial[names[i]] += exponents[i];
    }
    *out = p->value.coefficient(monomial);
    return MM_OK;
  });
}

mm_status mm_poly_equal(const mm_poly* a, const mm_poly* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = a->value == b->value ? 1 : 0;
    return MM_OK;
  });
}

void mm_poly_free(mm_poly* p) { delete p; }

mm_status mm_beta_serialize(const mm_beta* b, char** out) {
  if (b == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    std::string text;
    for (const auto& [lambda, count] : b->value) {
      if (count == 0) continue;
      if (!text.empty()) text += '\n';
      text += "+" + std::to_string(count) + " * p" + lambda.to_string();
    }
    *out = copy_string(text.empty() ? "0" : text);
    return MM_OK;
  });
}

mm_status mm_beta_recover_egdp(const mm_beta* b, int64_t n, int64_t w, int64_t e, mm_poly** out) {
  if (b == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap<mm_poly>(macmahon::recover_egdp_explicit(b->value, n, w, e));
    return MM_OK;
  });
}

void mm_beta_free(mm_beta* b) { delete b; }

mm_status mm_verify(const mm_verify_options* options, char** report) {
  if (options == nullptr || report == nullptr) return null_argument();
  return guarded([&] {
    macmahon::VerifyOptions o;
    o.mode = options->mode == MM_VERIFY_RANDOM ? macmahon::VerifyMode::random : macmahon::VerifyMode::exhaustive;
    o.n_max = options->n_max;
    o.weight_max = options->weight_max;
    o.r = options->r;
    o.seed = options->seed;
    o.trials = options->trials;
    o.limits = to_limits(&options->limits);
    o.corrupt_beta = options->corrupt_beta != 0;
    const auto rep = macmahon::run_verification(o);
    *report = copy_string(rep.text());
    if (!rep.passed()) {
      last_error = "verification failed";
      return MM_ERR_VERIFY;
    }
    return MM_OK;
  });
}

mm_status mm_counterexample(char** report) {
  if (report == nullptr) return null_argument();
  return guarded([&] {
    const auto rep = macmahon::counterexample();
    *report = copy_string(rep.text());
    if (!rep.passed()) {
      last_error = "counterexample facts do not hold";
      return MM_ERR_VERIFY;
    }
    return MM_OK;
  });
}

mm_status mm_bases_check(const char* family, int64_t n_max, int64_t w_max, const mm_limits* limits,
                         char** report) {
  if (family == nullptr || report == nullptr) return null_argument();
  return guarded([&] {
    const auto rep = macmahon::check_bases(family, n_max, w_max, to_limits(limits));
    *report = copy_string(rep.text);
    if (!rep.passed()) {
      last_error = "some transition matrices are not triangular with unit diagonal";
      return MM_ERR_VERIFY;
    }
    return MM_OK;
  });
}

mm_status mm_basis_matrix(const char* family, int64_t n, int64_t w, const mm_limits* limits, char** out) {
  if (family == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    macmahon::GraphFamily fam;
    if (std::strcmp(family, "star") == 0)
      fam = macmahon::star_family;
    else if (std::strcmp(family, "path") == 0)
      fam = macmahon::path_family;
    else
      macmahon::fail(macmahon::Errc::invalid_argument, std::string("unknown family '") + family + "'");
    *out = copy_string(macmahon::basis_matrix(fam, {n, w}, to_limits(limits)).serialize());
    return MM_OK;
  });
}

}  // extern "C"
