// Single entry point over the three engines.
#pragma once

#include <functional>
#include <span>

#include "shallowsort/engine_jumpback.hpp"
#include "shallowsort/engine_standard.hpp"
#include "shallowsort/engine_walkback.hpp"

namespace shallowsort {

enum class Engine { Standard, Walkback, Jumpback };

template <class T, class Cmp, class M>
void sort(std::span<T> a, Cmp cmp, const PolicyId& policy, Engine engine,
          MergeKind kind, M& m, TraceSink* trace = nullptr) {
    switch (engine) {
        case Engine::Standard:
            sort_standard(a, cmp, policy, kind, m, trace);
            break;
        case Engine::Walkback:
            sort_walkback(a, cmp, policy, kind, m, trace);
            break;
        case Engine::Jumpback:
            sort_jumpback(a, cmp, policy, kind, m, trace);
            break;
    }
}

template <class T>
void sort(std::span<T> a, const PolicyId& policy, Engine engine,
          MergeKind kind, Metrics& m, TraceSink* trace = nullptr) {
    sort(a, std::less<T>{}, policy, engine, kind, m, trace);
}

}  // namespace shallowsort
