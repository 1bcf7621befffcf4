#include "pavemat.h"

#include <cstring>
#include <set>

#include "core/enumerate.hpp"
#include "core/textio.hpp"

using namespace pavemat;

struct pm_matroid {
    Matroid value;
};

struct pm_seed {
    PavingSeed value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
pm_status guarded(Fn&& fn) noexcept {
    try {
        return fn();
    } catch (const NotAMatroid& e) {
        set_error(e.what());
        return PM_ERR_NOT_MATROID;
    } catch (const CapExceeded& e) {
        set_error(e.what());
        return PM_ERR_CAP;
    } catch (const ParseError& e) {
        set_error(e.what());
        return PM_ERR_PARSE;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return PM_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return PM_ERR_DOMAIN;
    } catch (const std::exception& e) {
        set_error(e.what());
        return PM_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return PM_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pm_status require(bool ok) {
    if (!ok) {
        set_error("required argument was NULL");
        return PM_ERR_NULL;
    }
    return PM_OK;
}

struct EnumerationStopped {};

}  // namespace

extern "C" {

const char* pm_version(void) { return "1.0.0"; }

const char* pm_status_name(pm_status status) {
    switch (status) {
        case PM_OK: return "ok";
        case PM_ERR_NULL: return "null argument";
        case PM_ERR_DOMAIN: return "domain error";
        case PM_ERR_NOT_MATROID: return "not a matroid";
        case PM_ERR_PARSE: return "parse error";
        case PM_ERR_CAP: return "cap exceeded";
        case PM_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* pm_last_error(void) { return g_last_error.c_str(); }

void pm_string_free(char* text) { delete[] text; }

/* ---- seeds ---- */

pm_status pm_seed_create(int n, int r, pm_seed** out) {
    if (pm_status s = require(out); s != PM_OK) return s;
    return guarded([&] {
        GroundSet g(n);
        *out = new pm_seed{PavingSeed{g, r, SetFamily(g)}};
        return PM_OK;
    });
}

pm_status pm_seed_add_set(pm_seed* seed, const int* elements, int count) {
    if (pm_status s = require(seed && (elements || count == 0)); s != PM_OK) return s;
    return guarded([&] {
        if (count < 0) throw std::invalid_argument("negative element count");
        ElementSet set = ElementSet::empty(seed->value.ground);
        for (int i = 0; i < count; ++i) set = set.with(elements[i]);
        seed->value.large_hyperplanes.insert(set);
        return PM_OK;
    });
}

pm_status pm_seed_parse(const char* text, pm_seed** out) {
    if (pm_status s = require(text && out); s != PM_OK) return s;
    return guarded([&] {
        *out = new pm_seed{parse_seed(text)};
        return PM_OK;
    });
}

pm_status pm_seed_format(const pm_seed* seed, char** out_text) {
    if (pm_status s = require(seed && out_text); s != PM_OK) return s;
    return guarded([&] {
        *out_text = copy_string(format_seed(seed->value));
        return PM_OK;
    });
}

pm_status pm_seed_validate(const pm_seed* seed) {
    if (pm_status s = require(seed); s != PM_OK) return s;
    if (auto violation = validate_seed(seed->value)) {
        set_error(violation->message);
        return PM_ERR_DOMAIN;
    }
    return PM_OK;
}

int pm_seed_n(const pm_seed* seed) { return seed ? seed->value.ground.size() : 0; }
int pm_seed_rank(const pm_seed* seed) { return seed ? seed->value.r : 0; }
int pm_seed_set_count(const pm_seed* seed) {
    return seed ? static_cast<int>(seed->value.large_hyperplanes.size()) : 0;
}

void pm_seed_free(pm_seed* seed) { delete seed; }

/* ---- construction ---- */

pm_status pm_construct_paving(const pm_seed* seed, pm_matroid** out) {
    if (pm_status s = require(seed && out); s != PM_OK) return s;
    return guarded([&] {
        *out = new pm_matroid{construct_paving(seed->value).matroid};
        return PM_OK;
    });
}

pm_status pm_construct_sparse(const pm_seed* seed, pm_matroid** out) {
    if (pm_status s = require(seed && out); s != PM_OK) return s;
    return guarded([&] {
        CircuitSeed circuit_seed{seed->value.ground, seed->value.r,
                                 seed->value.large_hyperplanes};
        *out = new pm_matroid{construct_sparse(circuit_seed)};
        return PM_OK;
    });
}

pm_status pm_greedy_seed(int n, int r, long long bound, unsigned long long rng_seed,
                         int complete, pm_seed** out) {
    if (pm_status s = require(out); s != PM_OK) return s;
    return guarded([&] {
        GreedyConfig cfg;
        cfg.n = n;
        cfg.r = r;
        if (bound >= 0) cfg.bound = static_cast<std::uint64_t>(bound);
        cfg.rng_seed = rng_seed;
        cfg.complete = complete != 0;
        *out = new pm_seed{greedy_seed(cfg)};
        return PM_OK;
    });
}

/* ---- matroids ---- */

pm_status pm_matroid_parse(const char* text, pm_matroid** out) {
    if (pm_status s = require(text && out); s != PM_OK) return s;
    return guarded([&] {
        *out = new pm_matroid{matroid_from_record(parse_matroid_record(text))};
        return PM_OK;
    });
}

pm_status pm_matroid_format(const pm_matroid* m, int with_derived, char** out_text) {
    if (pm_status s = require(m && out_text); s != PM_OK) return s;
    return guarded([&] {
        *out_text = copy_string(format_matroid(m->value, with_derived != 0));
        return PM_OK;
    });
}

int pm_matroid_n(const pm_matroid* m) { return m ? m->value.size() : 0; }
int pm_matroid_rank(const pm_matroid* m) { return m ? m->value.rank() : 0; }
long long pm_matroid_basis_count(const pm_matroid* m) {
    return m ? static_cast<long long>(m->value.bases().size()) : 0;
}
int pm_matroid_is_paving(const pm_matroid* m) {
    return m && m->value.is_paving() ? 1 : 0;
}
int pm_matroid_is_sparse_paving(const pm_matroid* m) {
    return m && m->value.is_sparse_paving() ? 1 : 0;
}

pm_status pm_matroid_dual(const pm_matroid* m, pm_matroid** out) {
    if (pm_status s = require(m && out); s != PM_OK) return s;
    return guarded([&] {
        *out = new pm_matroid{m->value.dual()};
        return PM_OK;
    });
}

pm_status pm_matroid_seed(const pm_matroid* m, pm_seed** out) {
    if (pm_status s = require(m && out); s != PM_OK) return s;
    return guarded([&] {
        *out = new pm_seed{seed_of(m->value)};
        return PM_OK;
    });
}

void pm_matroid_free(pm_matroid* m) { delete m; }

pm_status pm_verify_text(const char* record_text, char** out_report, int* out_is_matroid) {
    if (pm_status s = require(record_text && out_report && out_is_matroid); s != PM_OK)
        return s;
    return guarded([&] {
        VerifyResult result = verify_record(parse_matroid_record(record_text));
        *out_report = copy_string(result.report);
        *out_is_matroid = result.is_matroid ? 1 : 0;
        return PM_OK;
    });
}

/* ---- enumeration ---- */

pm_status pm_enumerate(int n, int r, pm_class cls, pm_mode mode, pm_matroid_visitor visit,
                       void* user) {
    if (pm_status s = require(visit); s != PM_OK) return s;
    return guarded([&] {
        GroundSet g(n);
        auto deliver = [&](const Matroid& m) {
            pm_matroid handle{m};
            if (visit(&handle, user) != 0) throw EnumerationStopped{};
        };

        auto stream = [&](const std::function<void(const Matroid&)>& sink) {
            switch (cls) {
                case PM_CLASS_PAVING:
                    enumerate_paving(g, r,
                                     [&](const PavingConstruction& c) { sink(c.matroid); });
                    break;
                case PM_CLASS_SPARSE_PAVING:
                    enumerate_paving(g, r, [&](const PavingConstruction& c) {
                        if (c.matroid.is_sparse_paving()) sink(c.matroid);
                    });
                    break;
                case PM_CLASS_ALL:
                    enumerate_all_matroids(g, r, SimplicityFilter::none, sink);
                    break;
                default:
                    throw std::invalid_argument("unknown matroid class");
            }
        };

        try {
            if (mode == PM_MODE_LABELED) {
                stream(deliver);
            } else if (mode == PM_MODE_ISO) {
                // collect canonical forms first, then stream representatives
                std::set<std::vector<std::uint64_t>> classes;
                stream([&](const Matroid& m) {
                    std::vector<std::uint64_t> form;
                    for (const ElementSet& b : canonical_form(m)) form.push_back(b.bits());
                    classes.insert(std::move(form));
                });
                for (const auto& form : classes) {
                    SetFamily bases(g);
                    for (std::uint64_t bits : form) bases.insert(ElementSet(g, bits));
                    deliver(Matroid::from_bases_unchecked(g, bases));
                }
            } else {
                throw std::invalid_argument("unknown enumeration mode");
            }
        } catch (const EnumerationStopped&) {
        }
        return PM_OK;
    });
}

pm_status pm_count(int n, int r, pm_class cls, pm_mode mode, unsigned long long* out_count) {
    if (pm_status s = require(out_count); s != PM_OK) return s;
    return guarded([&] {
        EnumerationQuery query;
        query.n = n;
        query.r = r;
        switch (cls) {
            case PM_CLASS_PAVING: query.cls = MatroidClass::paving; break;
            case PM_CLASS_SPARSE_PAVING: query.cls = MatroidClass::sparse_paving; break;
            case PM_CLASS_ALL: query.cls = MatroidClass::all_matroids; break;
            default: throw std::invalid_argument("unknown matroid class");
        }
        query.mode = mode == PM_MODE_ISO ? CountMode::isomorphism_classes : CountMode::labeled;
        *out_count = count_matroids(query).count;
        return PM_OK;
    });
}

pm_status pm_count_table(int n, int r, pm_class cls, pm_mode mode, char** out_table) {
    if (pm_status s = require(out_table); s != PM_OK) return s;
    return guarded([&] {
        EnumerationQuery query;
        query.n = n;
        query.r = r;
        switch (cls) {
            case PM_CLASS_PAVING: query.cls = MatroidClass::paving; break;
            case PM_CLASS_SPARSE_PAVING: query.cls = MatroidClass::sparse_paving; break;
            case PM_CLASS_ALL: query.cls = MatroidClass::all_matroids; break;
            default: throw std::invalid_argument("unknown matroid class");
        }
        query.mode = mode == PM_MODE_ISO ? CountMode::isomorphism_classes : CountMode::labeled;
        *out_table = copy_string(format_count_table({count_matroids(query)}));
        return PM_OK;
    });
}

pm_status pm_check_bound(int n, int r, pm_simplicity convention, char** out_report,
                         int* out_holds) {
    if (pm_status s = require(out_report && out_holds); s != PM_OK) return s;
    return guarded([&] {
        SimplicityFilter filter;
        switch (convention) {
            case PM_SIMPLE_NONE: filter = SimplicityFilter::none; break;
            case PM_SIMPLE_PAPER: filter = SimplicityFilter::paper; break;
            case PM_SIMPLE_STANDARD: filter = SimplicityFilter::standard; break;
            default: throw std::invalid_argument("unknown simplicity convention");
        }
        BoundCheck check = verify_counting_inequality(n, r, filter);
        *out_report = copy_string(format_bound_check(check));
        *out_holds = check.holds ? 1 : 0;
        return PM_OK;
    });
}

}  // extern "C"
