#include "thetacalc/vars.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tc {

bool JetVar::operator<(const JetVar& o) const
{
    if (kind != o.kind) return kind < o.kind;
    if (index != o.index) return index < o.index;
    int wa = 0, wb = 0;
    for (int e : jet) wa += e;
    for (int e : o.jet) wb += e;
    if (wa != wb) return wa < wb;
    return jet < o.jet;
}

namespace {

struct PoolState {
    std::deque<JetVar> vars;
    std::map<JetVar, int> ids;
    std::mutex mu;
};

PoolState& pool()
{
    static PoolState s;
    return s;
}

void trim(std::vector<int>& J)
{
    while (!J.empty() && J.back() == 0) J.pop_back();
}

} // namespace

int VarPool::intern(const JetVar& v)
{
    PoolState& s = pool();
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.ids.find(v);
    if (it != s.ids.end()) return it->second;
    int id = (int)s.vars.size();
    s.vars.push_back(v);
    s.ids.emplace(v, id);
    return id;
}

const JetVar& VarPool::var(int id)
{
    return pool().vars[id];
}

int VarPool::u(int i)
{
    return intern(JetVar{JetVar::U, i, {}});
}

int VarPool::fjet(int i, std::vector<int> J)
{
    trim(J);
    return intern(JetVar{JetVar::F, i, std::move(J)});
}

int VarPool::raise(int id, int j)
{
    const JetVar& v = var(id);
    if (v.kind != JetVar::F) throw std::logic_error("raise: not a jet symbol");
    std::vector<int> J = v.jet;
    if ((int)J.size() < j) J.resize(j, 0);
    J[j - 1] += 1;
    return fjet(v.index, std::move(J));
}

std::string VarPool::name(int id)
{
    const JetVar& v = var(id);
    std::string out = (v.kind == JetVar::U ? "u" : "f") + std::to_string(v.index);
    if (v.kind == JetVar::F && !v.jet.empty()) {
        out += "_d{";
        bool first = true;
        for (int dir = 0; dir < (int)v.jet.size(); ++dir) {
            for (int c = 0; c < v.jet[dir]; ++c) {
                if (!first) out += ",";
                out += std::to_string(dir + 1);
                first = false;
            }
        }
        out += "}";
    }
    return out;
}

} // namespace tc
