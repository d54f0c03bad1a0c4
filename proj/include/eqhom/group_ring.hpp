#pragma once

#include <map>
#include <memory>
#include <string>

#include "eqhom/groups.hpp"
#include "eqhom/linalg.hpp"

namespace eqhom {

/// Finitely supported element of Zπ. Zero coefficients are never stored and
/// keys are canonical elements of the model.
class GroupRingElement {
public:
    explicit GroupRingElement(GroupModelPtr model) : model_(std::move(model)) {
        if (!model_) throw PreconditionError("group ring element needs a model");
    }

    static GroupRingElement unit(GroupModelPtr model) { return monomial(model, model->identity()); }

    static GroupRingElement monomial(GroupModelPtr model, const Element& g, const Integer& coeff = 1) {
        GroupRingElement x(std::move(model));
        x.add(g, coeff);
        return x;
    }

    const GroupModelPtr& model() const noexcept { return model_; }
    const std::map<Element, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(const Element& g) const {
        auto it = terms_.find(model_->normal_form(g));
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add(const Element& g, const Integer& coeff) {
        if (coeff.is_zero()) return;
        Element key = model_->normal_form(g);
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        check_model(o);
        for (const auto& [g, c] : o.terms_) add(g, c);
        return *this;
    }
    GroupRingElement& operator-=(const GroupRingElement& o) {
        check_model(o);
        for (const auto& [g, c] : o.terms_) add(g, -c);
        return *this;
    }
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return ring_multiply(a, b); }

    friend GroupRingElement ring_multiply(const GroupRingElement& x, const GroupRingElement& y) {
        x.check_model(y);
        GroupRingElement r(x.model_);
        for (const auto& [g, a] : x.terms_)
            for (const auto& [h, b] : y.terms_) r.add(x.model_->multiply(g, h), a * b);
        return r;
    }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return same_model(*a.model_, *b.model_) && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [g, c] : terms_) {
            if (!first) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            Integer a = abs(c);
            s += (a == 1 ? std::string() : a.str() + "*") + model_->format(g);
            first = false;
        }
        return s;
    }

private:
    static bool same_model(const GroupModel& a, const GroupModel& b) { return &a == &b || a == b; }

    void check_model(const GroupRingElement& o) const {
        if (!same_model(*model_, *o.model_)) throw ModelMismatch("group ring elements over different groups");
    }

    GroupModelPtr model_;
    std::map<Element, Integer> terms_;
};

/// Sum of coefficients; I = ker(augmentation).
inline Integer augmentation(const GroupRingElement& x) {
    Integer s = 0;
    for (const auto& [g, c] : x.terms()) s += c;
    return s;
}

}  // namespace eqhom
