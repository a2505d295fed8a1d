#include "lowindex.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "error.hpp"

namespace prism {

namespace {

constexpr int kMaxIndex = 64;
constexpr int kMaxCols = 8;
constexpr std::uint8_t kUndef = 0xff;

struct Table {
    std::uint8_t t[kMaxIndex][kMaxCols];
    int k;    // cosets in use
    int pos;  // every entry before this row-major position is defined
};

// Rotation elements of the presentation are edges P^-1 Q of the graph on {1,x,y,z,w}
// (node 0 is the identity), in relator order.
struct RotEdge {
    int p, q, label;
};
constexpr RotEdge rot_edges[9] = {{0, 1, 1}, {0, 2, 4}, {0, 3, 5}, {0, 4, 7}, {2, 1, 3},
                                     {3, 1, 2}, {3, 2, 6}, {2, 4, 9}, {3, 4, 8}};

class Searcher {
public:
    // The search runs on a spanning tree of that graph as generating set. The star at
    // the identity (plain x,y,z,w) keeps x^a1 etc. short; trees trading those for
    // involution columns were measured at several times the node count.
    Searcher(const Signature& s, int max_index) : max_(max_index)
    {
        if (max_index < 1 || max_index > kMaxIndex)
            throw Error(Errc::InvalidArgument, "max index must be in 1.." + std::to_string(kMaxIndex));
        constexpr std::array<int, 4> tree{0, 1, 2, 3};
        for (int j = 0; j < 4; ++j) {
            col_[j][0] = ncols_++;
            col_[j][1] = s[rot_edges[tree[j]].label] == 2 ? col_[j][0] : ncols_++;
            inv_[col_[j][0]] = col_[j][1];
            inv_[col_[j][1]] = col_[j][0];
        }
        // words (as columns) for the nodes, read off the tree from the identity
        std::vector<int> node[5];
        bool known[5] = {true, false, false, false, false};
        for (int pass = 0; pass < 4; ++pass)
            for (int j = 0; j < 4; ++j) {
                const auto& e = rot_edges[tree[j]];
                if (known[e.p] && !known[e.q]) {
                    node[e.q] = node[e.p];
                    node[e.q].push_back(col_[j][0]);
                    known[e.q] = true;
                } else if (known[e.q] && !known[e.p]) {
                    node[e.p] = node[e.q];
                    node[e.p].push_back(col_[j][1]);
                    known[e.p] = true;
                }
            }
        for (int g = 0; g < 4; ++g) gen_word_[g] = node[g + 1];
        for (const auto& e : rot_edges) {
            std::vector<int> base;
            for (auto it = node[e.p].rbegin(); it != node[e.p].rend(); ++it) base.push_back(inv_[*it]);
            base.insert(base.end(), node[e.q].begin(), node[e.q].end());
            std::vector<int> w;
            for (int rep = 0; rep < s[e.label]; ++rep) w.insert(w.end(), base.begin(), base.end());
            w = cyclic_reduce(w);
            if (w.empty()) continue;
            add_rotations(w);
            std::vector<int> iw(w.rbegin(), w.rend());
            for (int& c : iw) c = inv_[c];
            add_rotations(iw);
        }
    }

    Table root() const
    {
        Table t;
        std::memset(t.t, kUndef, sizeof t.t);
        t.k = 1;
        t.pos = 0;
        return t;
    }

    // Children of a node in search order. Returns false for a complete table.
    template <class F>
    bool expand(const Table& cur, F&& visit) const
    {
        int c = 0, cl = 0;
        if (!first_undefined(cur, c, cl)) return false;
        const int ic = inv_[cl];
        for (int d = 0; d <= cur.k; ++d) {
            if (d == cur.k && cur.k == max_) break;
            if (d < cur.k && cur.t[d][ic] != kUndef) continue;
            Table nt = cur;
            nt.pos = c * ncols_ + cl;
            if (d == cur.k) ++nt.k;
            if (!define_and_close(nt, c, cl, d)) continue;
            if (!canonical(nt)) continue;
            visit(nt);
        }
        return true;
    }

    PermRep to_rep(const Table& t) const
    {
        std::array<std::vector<int>, 4> img;
        for (int g = 0; g < 4; ++g)
            for (int i = 0; i < t.k; ++i) {
                int c = i;
                for (int cl : gen_word_[g]) c = t.t[c][cl];
                img[g].push_back(c);
            }
        return make_rep(std::move(img));
    }

private:
    int max_;
    int ncols_ = 0;
    int col_[4][2]{};
    int inv_[kMaxCols]{};
    std::vector<int> gen_word_[4];  // x,y,z,w in table columns
    std::vector<std::vector<int>> rot_[kMaxCols];

    std::vector<int> cyclic_reduce(const std::vector<int>& w) const
    {
        std::vector<int> r;
        for (int c : w) {
            if (!r.empty() && r.back() == inv_[c]) r.pop_back();
            else r.push_back(c);
        }
        size_t i = 0, j = r.size();
        while (j - i >= 2 && r[i] == inv_[r[j - 1]]) ++i, --j;
        return std::vector<int>(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
    }

    void add_rotations(const std::vector<int>& w)
    {
        const int n = static_cast<int>(w.size());
        for (int i = 0; i < n; ++i) {
            std::vector<int> r(n);
            for (int j = 0; j < n; ++j) r[j] = w[(i + j) % n];
            auto& bucket = rot_[r[0]];
            if (std::find(bucket.begin(), bucket.end(), r) == bucket.end()) bucket.push_back(std::move(r));
        }
    }

    bool first_undefined(const Table& t, int& c, int& cl) const
    {
        for (int p = t.pos; p < t.k * ncols_; ++p)
            if (t.t[p / ncols_][p % ncols_] == kUndef) {
                c = p / ncols_;
                cl = p % ncols_;
                return true;
            }
        return false;
    }

    // each table entry is set at most once, so this never overflows
    struct Queue {
        std::pair<int, int> v[kMaxIndex * kMaxCols];
        int n = 0;
        void push(int a, int b) { v[n++] = {a, b}; }
    };

    static void set(Table& t, int c, int cl, int d, int icl, Queue& q)
    {
        t.t[c][cl] = static_cast<std::uint8_t>(d);
        t.t[d][icl] = static_cast<std::uint8_t>(c);
        q.push(c, cl);
        if (!(c == d && cl == icl)) q.push(d, icl);
    }

    bool define_and_close(Table& t, int c, int cl, int d) const
    {
        Queue q;
        set(t, c, cl, d, inv_[cl], q);
        while (q.n) {
            auto [a, ac] = q.v[--q.n];
            for (const auto& w : rot_[ac])
                if (!scan(t, a, w, q)) return false;
        }
        return true;
    }

    // Trace w from coset a both ways; fill a single gap, reject a mismatch.
    bool scan(Table& t, int a, const std::vector<int>& w, Queue& q) const
    {
        const int n = static_cast<int>(w.size());
        int f = a, i = 0;
        while (i < n && t.t[f][w[i]] != kUndef) f = t.t[f][w[i++]];
        if (i == n) return f == a;
        int b = a, j = n - 1;
        while (j > i && t.t[b][inv_[w[j]]] != kUndef) b = t.t[b][inv_[w[j--]]];
        if (j > i) return true;
        // j == i: the single missing entry f --w[i]--> b
        const int ic = inv_[w[i]];
        if (t.t[b][ic] != kUndef) return t.t[b][ic] == f;
        set(t, f, w[i], b, ic, q);
        return true;
    }

    // false if renumbering from another base point gives a smaller table
    bool canonical(const Table& t) const
    {
        int fwd[kMaxIndex], back[kMaxIndex];
        for (int base = 1; base < t.k; ++base) {
            std::fill(fwd, fwd + t.k, -1);
            fwd[base] = 0;
            back[0] = base;
            int next = 1;
            bool decided = false;
            for (int r = 0; r < next && !decided; ++r) {
                const int old = back[r];
                for (int cl = 0; cl < ncols_; ++cl) {
                    const int o = t.t[old][cl];
                    const int cur = t.t[r][cl];
                    if (o == kUndef || cur == kUndef) {
                        decided = true;
                        break;
                    }
                    if (fwd[o] < 0) {
                        fwd[o] = next;
                        back[next++] = o;
                    }
                    if (fwd[o] != cur) {
                        if (fwd[o] < cur) return false;
                        decided = true;
                        break;
                    }
                }
            }
        }
        return true;
    }
};

template <class Emit>
void dfs(const Searcher& s, const Table& t, Emit& emit, std::uint64_t& nodes)
{
    ++nodes;
    if (!s.expand(t, [&](const Table& c) { dfs(s, c, emit, nodes); })) emit(t);
}

struct Prefix {
    Table table;
    bool complete;  // already a finished table
};

void collect_prefixes(const Searcher& s, const Table& t, int depth, std::vector<Prefix>& out)
{
    if (depth == 0) {
        out.push_back({t, false});
        return;
    }
    if (!s.expand(t, [&](const Table& c) { collect_prefixes(s, c, depth - 1, out); }))
        out.push_back({t, true});
}

struct Checkpoint {
    std::string header;
    std::vector<std::uint64_t> counts;  // reps written per completed prefix, in order
};

std::string checkpoint_header(const EnumerationTask& task, int depth, std::size_t prefixes)
{
    std::ostringstream os;
    os << "lowindex " << format_line(task.sig) << " max " << task.max_index << " depth " << depth << " prefixes "
       << prefixes;
    return os.str();
}

Checkpoint read_checkpoint(const std::string& path)
{
    Checkpoint c;
    std::ifstream in(path);
    if (!in) return c;
    std::getline(in, c.header);
    std::string word;
    std::size_t idx;
    std::uint64_t n;
    while (in >> word >> idx >> n) {
        if (word != "done" || idx != c.counts.size()) break;
        c.counts.push_back(n);
    }
    return c;
}

} // namespace

EnumerationStats enumerate_subgroups(const EnumerationTask& task, const EnumerationOptions& opt)
{
    Searcher s(task.sig, task.max_index);
    EnumerationStats st;
    st.by_index.assign(task.max_index + 1, 0);
    std::vector<Prefix> prefixes;
    collect_prefixes(s, s.root(), std::max(0, opt.split_depth), prefixes);

    std::size_t start = 0;
    std::ofstream out, ckpt;
    const bool checkpointing = !opt.checkpoint_path.empty();
    if (checkpointing) {
        if (opt.output_path.empty()) throw Error(Errc::InvalidArgument, "checkpointing needs an output path");
        const std::string header = checkpoint_header(task, opt.split_depth, prefixes.size());
        Checkpoint old = read_checkpoint(opt.checkpoint_path);
        if (!old.header.empty() && old.header != header)
            throw Error(Errc::InvalidArgument, "checkpoint belongs to a different run: " + old.header);
        std::uint64_t keep = 0;
        for (auto n : old.counts) keep += n;
        // keep exactly the records covered by the checkpoint
        std::vector<PermRep> kept;
        if (keep) {
            std::ifstream in(opt.output_path);
            if (!in) throw Error(Errc::Io, "checkpoint exists but output file is missing");
            auto all = read_reps(in);
            if (all.size() < keep) throw Error(Errc::Io, "output file is shorter than the checkpoint says");
            kept.assign(all.begin(), all.begin() + static_cast<long>(keep));
        }
        out.open(opt.output_path, std::ios::trunc);
        for (const auto& r : kept) {
            write_rep(out, r);
            out << '\n';
            ++st.results;
            ++st.by_index[r.degree()];
            if (opt.sink) opt.sink(r);
        }
        out.flush();
        ckpt.open(opt.checkpoint_path, std::ios::trunc);
        ckpt << header << '\n';
        for (std::size_t i = 0; i < old.counts.size(); ++i) ckpt << "done " << i << ' ' << old.counts[i] << '\n';
        ckpt.flush();
        start = old.counts.size();
    }

    // results per prefix; flushed in prefix order
    std::vector<std::vector<Table>> found(prefixes.size());
    std::vector<char> done(prefixes.size(), 0);
    std::vector<std::uint64_t> nodes(prefixes.size(), 0);
    std::mutex mu;
    std::size_t flushed = start;
    std::atomic<std::size_t> next{start};

    auto flush_ready = [&] {
        // caller holds mu
        while (flushed < prefixes.size() && done[flushed]) {
            for (const auto& t : found[flushed]) {
                PermRep r = s.to_rep(t);
                ++st.results;
                ++st.by_index[t.k];
                if (opt.sink) opt.sink(r);
                if (checkpointing) {
                    write_rep(out, r);
                    out << '\n';
                }
            }
            if (checkpointing) {
                out.flush();
                ckpt << "done " << flushed << ' ' << found[flushed].size() << '\n';
                ckpt.flush();
            }
            st.nodes += nodes[flushed];
            found[flushed].clear();
            found[flushed].shrink_to_fit();
            ++flushed;
            if (opt.progress) opt.progress(flushed, prefixes.size(), st.results);
        }
    };

    auto work = [&] {
        for (std::size_t i; (i = next++) < prefixes.size();) {
            std::vector<Table> local;
            std::uint64_t n = 0;
            if (prefixes[i].complete) {
                local.push_back(prefixes[i].table);
            } else {
                auto emit = [&](const Table& t) { local.push_back(t); };
                dfs(s, prefixes[i].table, emit, n);
            }
            std::lock_guard<std::mutex> lock(mu);
            found[i] = std::move(local);
            nodes[i] = n;
            done[i] = 1;
            flush_ready();
        }
    };
    int workers = std::max(1, opt.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return st;
}

std::vector<PermRep> enumerate_subgroups_list(const Signature& s, int max_index, int workers)
{
    std::vector<PermRep> out;
    EnumerationOptions o;
    o.workers = workers;
    o.sink = [&](const PermRep& r) { out.push_back(r); };
    enumerate_subgroups({s, max_index}, o);
    return out;
}

PermRep canonical_form(const PermRep& r)
{
    const int n = r.degree();
    std::vector<int> best;
    std::vector<int> fwd(n), back(n), img;
    for (int base = 0; base < n; ++base) {
        std::fill(fwd.begin(), fwd.end(), -1);
        fwd[base] = 0;
        back[0] = base;
        int next = 1;
        img.assign(4 * n, -1);
        for (int i = 0; i < next; ++i)
            for (int g = 0; g < 4; ++g) {
                int o = r.g[g][back[i]];
                if (fwd[o] < 0) {
                    fwd[o] = next;
                    back[next++] = o;
                }
            }
        if (next != n) throw Error(Errc::NotTransitive, "canonical form needs a transitive representation");
        // row-major over (point, generator) so ordering matches the relabelled tables
        for (int i = 0; i < n; ++i)
            for (int g = 0; g < 4; ++g) img[i * 4 + g] = fwd[r.g[g][back[i]]];
        if (best.empty() || img < best) best = img;
    }
    std::array<std::vector<int>, 4> out;
    for (int g = 0; g < 4; ++g)
        for (int i = 0; i < n; ++i) out[g].push_back(best[i * 4 + g]);
    return make_rep(std::move(out));
}

std::vector<PermRep> brute_force_reps(const Signature& s, int n)
{
    if (n > 8) throw Error(Errc::IndexTooLarge, "brute force is limited to index 8");
    if (n < 1) throw Error(Errc::InvalidArgument, "index must be positive");
    // all permutations of degree n
    std::vector<Perm> all;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do all.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    auto rels = relators(s);
    auto of_order = [&](int a) {
        std::vector<const Perm*> v;
        for (const auto& q : all)
            if (q.pow(a).is_identity()) v.push_back(&q);
        return v;
    };
    auto gx = of_order(s[1]), gy = of_order(s[4]), gz = of_order(s[5]), gw = of_order(s[7]);
    auto holds = [&](const PermRep& r, int k) {
        return evaluate_word(r, rels[k].base).pow(rels[k].exp).is_identity();
    };

    // relabel by every permutation and keep the lexicographic minimum
    auto smin = [&](const PermRep& r) {
        std::vector<int> best;
        for (const auto& q : all) {
            Perm qi = q.inverse();
            std::vector<int> key;
            key.reserve(4 * n);
            for (int g = 0; g < 4; ++g) {
                Perm c = compose(q, compose(r.g[g], qi));
                key.insert(key.end(), c.images().begin(), c.images().end());
            }
            if (best.empty() || key < best) best = std::move(key);
        }
        return best;
    };

    std::map<std::vector<int>, PermRep> classes;
    PermRep r;
    const Perm id = Perm::identity(n);
    r.g = {id, id, id, id};
    for (auto x : gx) {
        r.g[X] = *x;
        for (auto y : gy) {
            r.g[Y] = *y;
            if (!holds(r, 4)) continue;  // (y^-1 x)^a3
            for (auto z : gz) {
                r.g[Z] = *z;
                if (!holds(r, 5) || !holds(r, 6)) continue;
                for (auto w : gw) {
                    r.g[W] = *w;
                    if (!holds(r, 7) || !holds(r, 8)) continue;
                    if (orbits(n, {&r.g[0], &r.g[1], &r.g[2], &r.g[3]}).size() != 1) continue;
                    auto key = smin(r);
                    if (!classes.count(key)) classes.emplace(std::move(key), r);
                }
            }
        }
    }
    std::vector<PermRep> out;
    for (auto& [k, v] : classes) out.push_back(v);
    return out;
}

} // namespace prism
