#include "wappell/appell.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

#include "wappell/error.hpp"

namespace wappell {

namespace detail {

struct AppellState {
  std::string name;
  // Exactly one of these is set for live specs; both may be null for frozen
  // (corrupted) specs that serve purely from their caches.
  std::function<Rat(int)> cumulant_source;  // k >= 1
  std::function<Rat(int)> moment_source;    // k >= 1 (z_0 = 1 implicit)
  int max_order = -1;  // >= 0: refuse requests beyond this order
  std::optional<std::pair<Rat, int>> exp_rt_params;

  mutable std::vector<Rat> z{Rat(1)};  // z[0..m]
  mutable std::vector<Rat> c{Rat(0)};  // c[1..m], slot 0 unused
  mutable std::vector<Poly> polys;     // polys[n] = A_n
  mutable std::mutex mu;

  // Extends both streams to order n. Caller must hold mu.
  void ensure_locked(int n) const {
    if (max_order >= 0 && n > max_order) {
      throw InternalError(name + ": order " + std::to_string(n) +
                          " beyond materialised range");
    }
    while (static_cast<int>(z.size()) <= n) {
      const int m = static_cast<int>(z.size());
      if (cumulant_source) {
        // z_m = c_m + sum_{i=1}^{m-1} C(m-1,i) c_{m-i} z_i
        Rat cm = cumulant_source(m);
        Rat zm = cm;
        for (int i = 1; i < m; ++i) {
          zm += Rat(binomial(m - 1, i)) * c[static_cast<std::size_t>(m - i)] *
                z[static_cast<std::size_t>(i)];
        }
        c.push_back(cm);
        z.push_back(zm);
      } else if (moment_source) {
        // c_m = z_m - sum_{i=1}^{m-1} C(m-1,i) c_{m-i} z_i
        Rat zm = moment_source(m);
        Rat cm = zm;
        for (int i = 1; i < m; ++i) {
          cm -= Rat(binomial(m - 1, i)) * c[static_cast<std::size_t>(m - i)] *
                z[static_cast<std::size_t>(i)];
        }
        c.push_back(cm);
        z.push_back(zm);
      } else {
        throw InternalError(name + ": no stream source");
      }
    }
  }
};

}  // namespace detail

AppellSpec::AppellSpec(std::shared_ptr<detail::AppellState> state)
    : state_(std::move(state)) {}

AppellSpec make_spec(std::shared_ptr<detail::AppellState> state) {
  return AppellSpec(std::move(state));
}

const std::string& AppellSpec::name() const { return state_->name; }

Rat AppellSpec::cumulant(int k) const {
  if (k < 1) throw std::invalid_argument("cumulant: order must be >= 1");
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->ensure_locked(k);
  return state_->c[static_cast<std::size_t>(k)];
}

Rat AppellSpec::moment(int k) const {
  if (k < 0) throw std::invalid_argument("moment: negative order");
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->ensure_locked(k);
  return state_->z[static_cast<std::size_t>(k)];
}

std::vector<Rat> AppellSpec::cumulants_upto(int n) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->ensure_locked(n);
  return std::vector<Rat>(state_->c.begin() + 1, state_->c.begin() + 1 + n);
}

std::vector<Rat> AppellSpec::moments_upto(int n) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->ensure_locked(n);
  return std::vector<Rat>(state_->z.begin(), state_->z.begin() + n + 1);
}

std::optional<std::pair<Rat, int>> AppellSpec::exp_rt_params() const {
  return state_->exp_rt_params;
}

namespace {

AppellSpec from_cumulant_fn(
    std::string name, std::function<Rat(int)> fn,
    std::optional<std::pair<Rat, int>> exp_rt_params = std::nullopt) {
  auto state = std::make_shared<detail::AppellState>();
  state->name = std::move(name);
  state->cumulant_source = std::move(fn);
  state->exp_rt_params = std::move(exp_rt_params);
  return make_spec(std::move(state));
}

}  // namespace

AppellSpec preset_monomial() {
  return from_cumulant_fn("monomial", [](int) { return Rat(0); });
}

AppellSpec preset_exp_rt(const Rat& alpha, int r) {
  if (r < 1) throw std::invalid_argument("exp-rt: r must be >= 1");
  Rat cr = Rat(factorial(r)) * alpha;
  return from_cumulant_fn(
      "exp-rt:" + rat_to_string(alpha) + "," + std::to_string(r),
      [cr, r](int k) { return k == r ? cr : Rat(0); },
      std::make_pair(alpha, r));
}

AppellSpec preset_shifted_monomial(const Rat& alpha) {
  return preset_exp_rt(alpha, 1);
}

AppellSpec preset_hermite() { return preset_exp_rt(Rat(-1, 2), 2); }

AppellSpec preset_yablonskii_vorobiev() { return preset_exp_rt(Rat(-4, 3), 3); }

AppellSpec preset_laguerre(const Rat& alpha) {
  return from_cumulant_fn("laguerre:" + rat_to_string(alpha), [alpha](int k) {
    Rat c = Rat(factorial(k - 1)) * alpha;
    return (k % 2 == 0) ? Rat(-c) : c;
  });
}

AppellSpec preset_jacobi(const Rat& alpha, const Rat& beta) {
  auto state = std::make_shared<detail::AppellState>();
  state->name = "jacobi:" + rat_to_string(alpha) + "," + rat_to_string(beta);
  Rat neg_a = -alpha;
  Rat neg_ab = -(alpha + beta);
  state->moment_source = [neg_a, neg_ab](int k) {
    Rat den = rising_factorial(neg_ab, k);
    if (den == 0) throw std::invalid_argument("degenerate Jacobi parameters");
    Rat num = rat_pow(Rat(2), k) * rising_factorial(neg_a, k);
    return Rat(num / den);
  };
  return make_spec(std::move(state));
}

AppellSpec spec_from_cumulants(std::vector<Rat> cumulants) {
  std::string name = "cumulants:";
  for (std::size_t i = 0; i < cumulants.size(); ++i) {
    if (i > 0) name += ",";
    name += rat_to_string(cumulants[i]);
  }
  return from_cumulant_fn(std::move(name), [cs = std::move(cumulants)](int k) {
    return k <= static_cast<int>(cs.size()) ? cs[static_cast<std::size_t>(k - 1)]
                                            : Rat(0);
  });
}

AppellSpec spec_from_moments(std::vector<Rat> moments) {
  if (moments.empty() || moments.front() != 1) {
    throw std::invalid_argument("not an Appell moment sequence");
  }
  std::string name = "moments:";
  for (std::size_t i = 0; i < moments.size(); ++i) {
    if (i > 0) name += ",";
    name += rat_to_string(moments[i]);
  }
  // Convert the finite list to cumulants; beyond the list cumulants are zero,
  // which pins down all higher moments.
  std::vector<Rat> cs = cumulants_from_moments(moments);
  auto spec = from_cumulant_fn(std::move(name), [cs = std::move(cs)](int k) {
    return k <= static_cast<int>(cs.size()) ? cs[static_cast<std::size_t>(k - 1)]
                                            : Rat(0);
  });
  return spec;
}

AppellSpec dual(const AppellSpec& spec) {
  AppellSpec base = spec;
  std::optional<std::pair<Rat, int>> params;
  if (auto p = spec.exp_rt_params()) {
    // c*_r = (-1)^{r-1} c_r, so the family parameter maps the same way.
    params = std::make_pair((p->second % 2 == 0) ? Rat(-p->first) : p->first,
                            p->second);
  }
  return from_cumulant_fn(
      "dual(" + spec.name() + ")",
      [base](int k) {
        Rat c = base.cumulant(k);
        return (k % 2 == 0) ? Rat(-c) : c;
      },
      std::move(params));
}

AppellSpec second_moment_spec(const AppellSpec& spec) {
  AppellSpec base = spec;
  std::optional<std::pair<Rat, int>> params;
  if (auto p = spec.exp_rt_params()) {
    // (c_r)^2/(r-1)! = (r! a)^2/(r-1)! = r!(r a^2): stays in the family when
    // the single nonzero cumulant has order >= 2.
    if (p->second >= 2) {
      params = std::make_pair(Rat(p->first * p->first * p->second), p->second);
    }
  }
  return from_cumulant_fn(
      "second-moment(" + spec.name() + ")",
      [base](int k) {
        if (k == 1) return Rat(0);
        Rat c = base.cumulant(k);
        return Rat(c * c / Rat(factorial(k - 1)));
      },
      std::move(params));
}

AppellSpec centralize(const AppellSpec& spec) {
  AppellSpec base = spec;
  return from_cumulant_fn("centralized(" + spec.name() + ")", [base](int k) {
    return k == 1 ? Rat(0) : base.cumulant(k);
  });
}

std::vector<Rat> moments_from_cumulants(const AppellSpec& spec, int n) {
  return spec.moments_upto(n);
}

std::vector<Rat> cumulants_from_moments(const std::vector<Rat>& moments) {
  if (moments.empty() || moments.front() != 1) {
    throw std::invalid_argument("not an Appell moment sequence");
  }
  const int n = static_cast<int>(moments.size()) - 1;
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));  // slot 0 unused
  for (int m = 1; m <= n; ++m) {
    Rat cm = moments[static_cast<std::size_t>(m)];
    for (int i = 1; i < m; ++i) {
      cm -= Rat(binomial(m - 1, i)) * c[static_cast<std::size_t>(m - i)] *
            moments[static_cast<std::size_t>(i)];
    }
    c[static_cast<std::size_t>(m)] = cm;
  }
  return std::vector<Rat>(c.begin() + 1, c.end());
}

Poly appell_poly(const AppellSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("appell_poly: negative degree");
  auto& state = *spec.state_;
  std::lock_guard<std::mutex> lock(state.mu);
  state.ensure_locked(n);
  while (static_cast<int>(state.polys.size()) <= n) {
    const int m = static_cast<int>(state.polys.size());
    std::vector<Rat> coeffs(static_cast<std::size_t>(m) + 1, Rat(0));
    for (int k = 0; k <= m; ++k) {
      // Coefficient of x^{m-k} is C(m,k) z_k.
      coeffs[static_cast<std::size_t>(m - k)] =
          Rat(binomial(m, k)) * state.z[static_cast<std::size_t>(k)];
    }
    state.polys.emplace_back(std::move(coeffs));
  }
  return state.polys[static_cast<std::size_t>(n)];
}

bool integrality_hypothesis(const AppellSpec& spec, int order) {
  for (int k = 1; k <= order; ++k) {
    Rat q = spec.cumulant(k) / Rat(factorial(k - 1));
    if (!rat_is_integer(q)) return false;
  }
  return true;
}

AppellSpec corrupted_for_testing(const AppellSpec& spec, int k, const Rat& delta,
                                 int order) {
  if (k < 1 || k > order) {
    throw std::invalid_argument("corrupted_for_testing: order out of range");
  }
  // Materialise the honest streams first, then break one cumulant.
  std::vector<Rat> z = spec.moments_upto(order);
  std::vector<Rat> c = spec.cumulants_upto(order);
  c[static_cast<std::size_t>(k - 1)] += delta;
  auto state = std::make_shared<detail::AppellState>();
  state->name = "corrupted(" + spec.name() + ";c" + std::to_string(k) + ")";
  state->max_order = order;
  state->z = std::move(z);
  state->c.resize(1, Rat(0));
  state->c.insert(state->c.end(), c.begin(), c.end());
  return make_spec(std::move(state));
}

AppellSpec parse_spec(const std::string& text) {
  auto parse_rat_list = [](const std::string& body) {
    std::vector<Rat> values;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
      values.push_back(parse_rat(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return values;
  };

  const std::size_t colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string body =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);

  if (head == "monomial" || head == "hermite" || head == "yablonskii") {
    if (colon != std::string::npos) {
      throw std::invalid_argument("spec '" + head + "' takes no parameters");
    }
    if (head == "monomial") return preset_monomial();
    if (head == "hermite") return preset_hermite();
    return preset_yablonskii_vorobiev();
  }
  if (colon == std::string::npos) {
    throw std::invalid_argument("unknown spec '" + text + "'");
  }
  if (head == "exp-rt") {
    auto values = parse_rat_list(body);
    if (values.size() != 2 || !rat_is_integer(values[1])) {
      throw std::invalid_argument("exp-rt expects 'exp-rt:alpha,r'");
    }
    long r = values[1].get_num().get_si();
    if (r < 1 || values[1].get_num() != static_cast<long>(r)) {
      throw std::invalid_argument("exp-rt: r must be a positive integer");
    }
    return preset_exp_rt(values[0], static_cast<int>(r));
  }
  if (head == "laguerre") {
    auto values = parse_rat_list(body);
    if (values.size() != 1) {
      throw std::invalid_argument("laguerre expects 'laguerre:alpha'");
    }
    return preset_laguerre(values[0]);
  }
  if (head == "jacobi") {
    auto values = parse_rat_list(body);
    if (values.size() != 2) {
      throw std::invalid_argument("jacobi expects 'jacobi:alpha,beta'");
    }
    return preset_jacobi(values[0], values[1]);
  }
  if (head == "cumulants") {
    return spec_from_cumulants(body.empty() ? std::vector<Rat>{}
                                            : parse_rat_list(body));
  }
  if (head == "moments") {
    return spec_from_moments(parse_rat_list(body));
  }
  throw std::invalid_argument("unknown spec '" + text + "'");
}

}  // namespace wappell
