#include "fusionlab/checks.hpp"

#include <functional>

namespace fusionlab {

namespace {

bool wants(const CheckOptions& opt, const char* tag) {
    return opt.theorem == "all" || opt.theorem == tag;
}

HypothesisFlags merge_flags(const HypothesisFlags& a, const HypothesisFlags& b) {
    HypothesisFlags out;
    out.spherical = a.spherical || b.spherical;
    out.pseudo_unitary = a.pseudo_unitary || b.pseudo_unitary;
    out.braided = a.braided || b.braided;
    out.ribbon = a.ribbon || b.ribbon;
    out.unitary = a.unitary || b.unitary;
    out.modular = a.modular || b.modular;
    return out;
}

/// Ascending rational primes dividing n (n >= 2), by trial division.
std::vector<long> prime_divisors(BigInt n) {
    std::vector<long> out;
    for (long p = 2; BigInt(p) * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(static_cast<long>(n));
    }
    return out;
}

TheoremReport skipped_report(const char* tag, std::string statement,
                             std::string detail) {
    TheoremReport r;
    r.tag = tag;
    r.statement = std::move(statement);
    r.status = TheoremCheck::Status::Skipped;
    r.detail = std::move(detail);
    return r;
}

TheoremReport aborted_report(const std::string& tag, const std::string& why) {
    TheoremReport r;
    r.tag = tag;
    r.statement = "claim evaluation aborted";
    r.status = TheoremCheck::Status::Indeterminate;
    r.detail = why;
    return r;
}

} // namespace

const std::vector<std::string>& claim_catalog() {
    static const std::vector<std::string> ids = {
        "5.1", "7.1", "ft",  "1.5",     "1.6", "1.7", "1.1",
        "1.2", "1.3", "1.4", "5.3",     "5.3-sum",    "5.4",
        "5.5", "6.1", "6.2", "6.3",     "6.4", "6.5", "6.6",
        "7.2"};
    return ids;
}

bool known_claim(const std::string& id) {
    for (const std::string& known : claim_catalog()) {
        if (known == id) {
            return true;
        }
    }
    return false;
}

void run_checks(ReportDocument& doc, const RingDocument& input,
                const CheckOptions& opt) {
    if (opt.theorem != "all" && !known_claim(opt.theorem)) {
        throw Error("unknown claim id '" + opt.theorem + "'");
    }
    const FusionRing& ring = input.ring;
    if (!is_commutative(ring)) {
        throw Error("claim checks require a commutative fusion ring ('" +
                    input.name + "')");
    }
    if (opt.generator && *opt.generator >= ring.rank) {
        throw Error("generator index out of range");
    }
    const HypothesisFlags assume = merge_flags(input.flags, opt.assume);

    CharacterTable table = character_table(ring);
    SphericalData spherical = spherical_data(table);
    DualHypergroup dual = dual_constants(table);

    auto emit = [&](const char* tag,
                    const std::function<TheoremReport()>& fn) {
        if (!wants(opt, tag)) {
            return;
        }
        try {
            add_entry(doc, input.name, fn());
        } catch (const IndeterminateError& e) {
            add_entry(doc, input.name, aborted_report(tag, e.what()));
        }
    };

    // Per-ring claims.
    emit("5.1", [&] { return is_s_isaacs(table, spherical, opt.s).report; });
    emit("7.1", [&] {
        return conjecture_7_2(table, spherical, dual,
                              opt.generator.value_or(0), assume)
            .one_isaacs.report;
    });
    emit("ft", [&] {
        return frobenius_type(table, spherical, BigRat(1)).report;
    });

    if (wants(opt, "1.5") || wants(opt, "1.6") || wants(opt, "1.7")) {
        std::vector<long> primes;
        const Scalar& total = table.fp.total;
        if (total.kind() == Scalar::Kind::Rational &&
            rat_den(total.rat()) == 1 && total.rat() >= 2) {
            primes = prime_divisors(rat_num(total.rat()));
        }
        if (primes.empty()) {
            const char* why =
                "the global Frobenius-Perron dimension has no rational prime "
                "divisor";
            for (const char* tag : {"1.5", "1.6", "1.7"}) {
                if (wants(opt, tag)) {
                    add_entry(doc, input.name,
                              skipped_report(tag,
                                             "prime-grading criterion at p",
                                             why));
                }
            }
        } else {
            for (long p : primes) {
                std::optional<ItoMichlerReport> im;
                std::string err;
                try {
                    im = ito_michler(table, dual, p, assume);
                } catch (const IndeterminateError& e) {
                    err = e.what();
                }
                auto pick = [&](const char* tag,
                                TheoremReport ItoMichlerReport::*member) {
                    if (!wants(opt, tag)) {
                        return;
                    }
                    if (im) {
                        add_entry(doc, input.name, (*im).*member);
                    } else {
                        add_entry(doc, input.name, aborted_report(tag, err));
                    }
                };
                pick("1.5", &ItoMichlerReport::converse);
                pick("1.6", &ItoMichlerReport::forward);
                pick("1.7", &ItoMichlerReport::biconditional);
            }
        }
    }

    if (wants(opt, "1.2") && !input.modular) {
        add_entry(doc, input.name,
                  skipped_report("1.2",
                                 "dim(X)^2 divides dim C / |U(C)| for modular "
                                 "data",
                                 "the document carries no S-matrix"));
    }

    // Per-simple claims.
    static const char* kDivTags[] = {"1.1", "1.3", "1.4", "5.3", "5.4", "5.5",
                                     "6.2", "6.3", "6.4", "6.5", "6.6"};
    bool need_div = false;
    for (const char* t : kDivTags) {
        need_div = need_div || wants(opt, t);
    }
    const bool need_orbit = wants(opt, "6.1") || wants(opt, "5.3-sum");
    const bool need_conj = wants(opt, "7.2");
    const bool need_modular = wants(opt, "1.2") && input.modular.has_value();
    if (!need_div && !need_orbit && !need_conj && !need_modular) {
        return;
    }

    std::vector<std::size_t> simples;
    if (opt.generator) {
        simples.push_back(*opt.generator);
    } else {
        for (std::size_t x = 0; x < ring.rank; ++x) {
            simples.push_back(x);
        }
    }

    for (std::size_t x : simples) {
        std::optional<DivisibilityReport> div;
        std::string div_err;
        if (need_div) {
            try {
                div = divisibility_theorems(table, spherical, dual, x, opt.s,
                                            assume);
            } catch (const IndeterminateError& e) {
                div_err = e.what();
            }
        }
        std::optional<OrbitSumReport> orbit;
        std::string orbit_err;
        if (need_orbit) {
            try {
                orbit = orbit_sum_identities(table, spherical, dual, x, opt.s);
            } catch (const IndeterminateError& e) {
                orbit_err = e.what();
            }
        }

        auto from_div = [&](const char* tag) {
            emit(tag, [&]() -> TheoremReport {
                if (!div) {
                    return aborted_report(tag, div_err);
                }
                return div->by_tag(tag);
            });
        };
        auto from_orbit = [&](const char* tag,
                              TheoremReport OrbitSumReport::*member) {
            emit(tag, [&]() -> TheoremReport {
                if (!orbit) {
                    return aborted_report(tag, orbit_err);
                }
                return (*orbit).*member;
            });
        };

        from_div("1.1");
        if (need_modular) {
            emit("1.2", [&] {
                return theorem_1_2(*input.modular, ring, x, assume);
            });
        }
        from_div("1.3");
        from_div("1.4");
        from_div("5.3");
        from_orbit("5.3-sum", &OrbitSumReport::lambda_sum);
        from_div("5.4");
        from_div("5.5");
        from_orbit("6.1", &OrbitSumReport::norm_sum);
        from_div("6.2");
        from_div("6.3");
        from_div("6.4");
        from_div("6.5");
        from_div("6.6");
        emit("7.2", [&] {
            return conjecture_7_2(table, spherical, dual, x, assume)
                .integrality;
        });
    }
}

} // namespace fusionlab
