#include "graft/matching.hpp"

#include <algorithm>
#include <limits>

// Maximum-weight general matching via Edmonds' blossom algorithm in the
// primal-dual formulation popularized by Galil ("Efficient algorithms for
// finding maximum matching in graphs", 1986). The implementation follows
// the well-known O(V^3) structure: repeated stages grow alternating trees
// from free vertices, shrink odd cycles into blossoms, and adjust dual
// variables until an augmenting path appears. Vertex duals, edge slacks
// and deltas are kept pre-multiplied by two so that all arithmetic stays
// integral.

namespace graft {

namespace {

constexpr long long kNoSlack = std::numeric_limits<long long>::max();

struct Blossom {
    // State of one run of the algorithm.
    int nvertex;
    int nedge;
    bool maxcardinality;
    std::vector<WeightedEdge> edges;
    long long maxweight = 0;

    // endpoint[p]: vertex at endpoint p, where p = 2k or 2k+1 of edge k.
    std::vector<int> endpoint;
    // neighbend[v]: remote endpoints of edges incident to v.
    std::vector<std::vector<int>> neighbend;

    std::vector<int> mate;      // per vertex: remote endpoint index or -1
    std::vector<int> label;     // per vertex/blossom: 0 free, 1 S, 2 T, 5 breadcrumb
    std::vector<int> labelend;  // endpoint through which the label was assigned
    std::vector<int> inblossom; // top-level blossom of each vertex
    std::vector<int> blossomparent;
    std::vector<std::vector<int>> blossomchilds;
    std::vector<int> blossombase;
    std::vector<std::vector<int>> blossomendps;
    std::vector<int> bestedge;
    std::vector<std::vector<int>> blossombestedges;
    std::vector<int> unusedblossoms;
    std::vector<long long> dualvar;
    std::vector<char> allowedge;
    std::vector<int> queue;

    Blossom(int n, const std::vector<WeightedEdge>& es, bool maxcard)
        : nvertex(n), nedge(static_cast<int>(es.size())), maxcardinality(maxcard),
          edges(es) {
        for (const WeightedEdge& e : edges) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
                throw InputError("matching: bad edge endpoints");
            maxweight = std::max(maxweight, e.weight);
        }
        maxweight = std::max<long long>(maxweight, 0);

        endpoint.resize(2 * nedge);
        for (int p = 0; p < 2 * nedge; ++p)
            endpoint[p] = (p % 2 == 0) ? edges[p / 2].u : edges[p / 2].v;
        neighbend.assign(nvertex, {});
        for (int k = 0; k < nedge; ++k) {
            neighbend[edges[k].u].push_back(2 * k + 1);
            neighbend[edges[k].v].push_back(2 * k);
        }

        mate.assign(nvertex, -1);
        label.assign(2 * nvertex, 0);
        labelend.assign(2 * nvertex, -1);
        inblossom.resize(nvertex);
        for (int v = 0; v < nvertex; ++v) inblossom[v] = v;
        blossomparent.assign(2 * nvertex, -1);
        blossomchilds.assign(2 * nvertex, {});
        blossombase.resize(2 * nvertex);
        for (int v = 0; v < nvertex; ++v) blossombase[v] = v;
        for (int b = nvertex; b < 2 * nvertex; ++b) blossombase[b] = -1;
        blossomendps.assign(2 * nvertex, {});
        bestedge.assign(2 * nvertex, -1);
        blossombestedges.assign(2 * nvertex, {});
        for (int b = nvertex; b < 2 * nvertex; ++b) unusedblossoms.push_back(b);
        dualvar.assign(2 * nvertex, 0);
        for (int v = 0; v < nvertex; ++v) dualvar[v] = maxweight;
        allowedge.assign(nedge, 0);
    }

    static void fail(const char* what) { throw Error(std::string("matching: ") + what); }
    void check(bool cond, const char* what) const {
        if (!cond) fail(what);
    }

    long long slack(int k) const {
        return dualvar[edges[k].u] + dualvar[edges[k].v] - 2 * edges[k].weight;
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nvertex) {
            out.push_back(b);
        } else {
            for (int t : blossomchilds[b]) blossom_leaves(t, out);
        }
    }

    // Assign label t to the top-level blossom containing vertex w.
    void assign_label(int w, int t, int p) {
        int b = inblossom[w];
        check(label[w] == 0 && label[b] == 0, "assign_label on labeled vertex");
        label[w] = label[b] = t;
        labelend[w] = labelend[b] = p;
        bestedge[w] = bestedge[b] = -1;
        if (t == 1) {
            std::vector<int> leaves;
            blossom_leaves(b, leaves);
            queue.insert(queue.end(), leaves.begin(), leaves.end());
        } else if (t == 2) {
            int base = blossombase[b];
            check(mate[base] >= 0, "T-blossom with single base");
            assign_label(endpoint[mate[base]], 1, mate[base] ^ 1);
        }
    }

    // Trace back from vertices v and w to discover either a new blossom or
    // an augmenting path. Returns the base vertex, or -1 on augmenting path.
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom[v];
            if (label[b] & 4) {
                base = blossombase[b];
                break;
            }
            check(label[b] == 1, "scan_blossom expects S-blossom");
            path.push_back(b);
            label[b] = 5;
            check(labelend[b] == mate[blossombase[b]], "labelend/mate mismatch");
            if (labelend[b] == -1) {
                v = -1; // single vertex; stop tracing this side
            } else {
                v = endpoint[labelend[b]];
                b = inblossom[v];
                check(label[b] == 2, "expected T-blossom when tracing");
                check(labelend[b] >= 0, "T-blossom without labelend");
                v = endpoint[labelend[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label[b] = 1;
        return base;
    }

    // Construct a new blossom with the given base, through S-vertices
    // connected by edge k.
    void add_blossom(int base, int k) {
        int v = edges[k].u;
        int w = edges[k].v;
        int bb = inblossom[base];
        int bv = inblossom[v];
        int bw = inblossom[w];
        check(!unusedblossoms.empty(), "out of blossom slots");
        int b = unusedblossoms.back();
        unusedblossoms.pop_back();
        blossombase[b] = base;
        blossomparent[b] = -1;
        blossomparent[bb] = b;
        std::vector<int> path;
        std::vector<int> endps;
        while (bv != bb) {
            blossomparent[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend[bv]);
            check(label[bv] == 2 ||
                      (label[bv] == 1 && labelend[bv] == mate[blossombase[bv]]),
                  "add_blossom trace v");
            check(labelend[bv] >= 0, "add_blossom labelend v");
            v = endpoint[labelend[bv]];
            bv = inblossom[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend[bw] ^ 1);
            check(label[bw] == 2 ||
                      (label[bw] == 1 && labelend[bw] == mate[blossombase[bw]]),
                  "add_blossom trace w");
            check(labelend[bw] >= 0, "add_blossom labelend w");
            w = endpoint[labelend[bw]];
            bw = inblossom[w];
        }
        blossomchilds[b] = std::move(path);
        blossomendps[b] = std::move(endps);
        check(label[bb] == 1, "blossom base not S");
        label[b] = 1;
        labelend[b] = labelend[bb];
        dualvar[b] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int u : leaves) {
            if (label[inblossom[u]] == 2) queue.push_back(u);
            inblossom[u] = b;
        }
        // Compute the blossom's list of least-slack edges to S-blossoms.
        std::vector<int> bestedgeto(2 * nvertex, -1);
        for (int child : blossomchilds[b]) {
            std::vector<std::vector<int>> nblists;
            if (blossombestedges[child].empty()) {
                std::vector<int> cl;
                blossom_leaves(child, cl);
                for (int u : cl) {
                    std::vector<int> ks;
                    ks.reserve(neighbend[u].size());
                    for (int p : neighbend[u]) ks.push_back(p / 2);
                    nblists.push_back(std::move(ks));
                }
            } else {
                nblists.push_back(blossombestedges[child]);
            }
            for (const std::vector<int>& nblist : nblists) {
                for (int ek : nblist) {
                    int i = edges[ek].u;
                    int j = edges[ek].v;
                    if (inblossom[j] == b) std::swap(i, j);
                    int bj = inblossom[j];
                    if (bj != b && label[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(ek) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = ek;
                }
            }
            blossombestedges[child].clear();
            bestedge[child] = -1;
        }
        blossombestedges[b].clear();
        for (int ek : bestedgeto)
            if (ek != -1) blossombestedges[b].push_back(ek);
        bestedge[b] = -1;
        for (int ek : blossombestedges[b])
            if (bestedge[b] == -1 || slack(ek) < slack(bestedge[b]))
                bestedge[b] = ek;
    }

    // Index into a blossom child/endpoint list with python-style wrap-around.
    static int wrap(const std::vector<int>& xs, int idx) {
        int s = static_cast<int>(xs.size());
        return xs[((idx % s) + s) % s];
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds[b]) {
            blossomparent[s] = -1;
            if (s < nvertex) {
                inblossom[s] = s;
            } else if (endstage && dualvar[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (int u : leaves) inblossom[u] = s;
            }
        }
        if (!endstage && label[b] == 2) {
            // The expanding blossom was a T-blossom mid-stage; relabel its
            // sub-blossoms along the alternating path through it.
            check(labelend[b] >= 0, "expanding T-blossom without labelend");
            int entrychild = inblossom[endpoint[labelend[b] ^ 1]];
            int j = -1;
            for (int i = 0; i < static_cast<int>(blossomchilds[b].size()); ++i)
                if (blossomchilds[b][i] == entrychild) { j = i; break; }
            check(j >= 0, "entry child not found");
            int jstep, endptrick;
            if (j & 1) {
                j -= static_cast<int>(blossomchilds[b].size());
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend[b];
            while (j != 0) {
                label[endpoint[p ^ 1]] = 0;
                label[endpoint[wrap(blossomendps[b], j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint[p ^ 1], 2, p);
                allowedge[wrap(blossomendps[b], j - endptrick) / 2] = 1;
                j += jstep;
                p = wrap(blossomendps[b], j - endptrick) ^ endptrick;
                allowedge[p / 2] = 1;
                j += jstep;
            }
            int bv = blossomchilds[b][0];
            label[endpoint[p ^ 1]] = label[bv] = 2;
            labelend[endpoint[p ^ 1]] = labelend[bv] = p;
            bestedge[bv] = -1;
            j += jstep;
            while (wrap(blossomchilds[b], j) != entrychild) {
                bv = wrap(blossomchilds[b], j);
                if (label[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bv, leaves);
                int reached = -1;
                for (int u : leaves)
                    if (label[u] != 0) { reached = u; break; }
                if (reached != -1) {
                    check(label[reached] == 2, "reached vertex not T");
                    check(inblossom[reached] == bv, "reached vertex outside blossom");
                    label[reached] = 0;
                    label[endpoint[mate[blossombase[bv]]]] = 0;
                    assign_label(reached, 2, labelend[reached]);
                }
                j += jstep;
            }
        }
        label[b] = -1;
        labelend[b] = -1;
        blossomchilds[b].clear();
        blossomendps[b].clear();
        blossombase[b] = -1;
        blossombestedges[b].clear();
        bestedge[b] = -1;
        unusedblossoms.push_back(b);
    }

    // Swap matched and unmatched edges along a path through blossom b from
    // vertex v to the blossom base, then rotate the blossom accordingly.
    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent[t] != b) t = blossomparent[t];
        if (t >= nvertex) augment_blossom(t, v);
        int i = -1;
        for (int idx = 0; idx < static_cast<int>(blossomchilds[b].size()); ++idx)
            if (blossomchilds[b][idx] == t) { i = idx; break; }
        check(i >= 0, "augment_blossom child not found");
        int j = i;
        int jstep, endptrick;
        if (i & 1) {
            j -= static_cast<int>(blossomchilds[b].size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = wrap(blossomchilds[b], j);
            int p = wrap(blossomendps[b], j - endptrick) ^ endptrick;
            if (t >= nvertex) augment_blossom(t, endpoint[p]);
            j += jstep;
            t = wrap(blossomchilds[b], j);
            if (t >= nvertex) augment_blossom(t, endpoint[p ^ 1]);
            mate[endpoint[p]] = p ^ 1;
            mate[endpoint[p ^ 1]] = p;
        }
        std::rotate(blossomchilds[b].begin(), blossomchilds[b].begin() + i,
                    blossomchilds[b].end());
        std::rotate(blossomendps[b].begin(), blossomendps[b].begin() + i,
                    blossomendps[b].end());
        blossombase[b] = blossombase[blossomchilds[b][0]];
        check(blossombase[b] == v, "augment_blossom base mismatch");
    }

    // Augment the matching along the path through edge k.
    void augment_matching(int k) {
        const int starts[2][2] = {{edges[k].u, 2 * k + 1}, {edges[k].v, 2 * k}};
        for (auto& start : starts) {
            int s = start[0];
            int p = start[1];
            for (;;) {
                int bs = inblossom[s];
                check(label[bs] == 1, "augment through non-S blossom");
                check(labelend[bs] == mate[blossombase[bs]], "augment labelend");
                if (bs >= nvertex) augment_blossom(bs, s);
                mate[s] = p;
                if (labelend[bs] == -1) break; // reached a free vertex
                int t = endpoint[labelend[bs]];
                int bt = inblossom[t];
                check(label[bt] == 2, "augment expects T-blossom");
                check(labelend[bt] >= 0, "augment T labelend");
                s = endpoint[labelend[bt]];
                int j = endpoint[labelend[bt] ^ 1];
                check(blossombase[bt] == t, "augment base mismatch");
                if (bt >= nvertex) augment_blossom(bt, j);
                mate[j] = labelend[bt];
                p = labelend[bt] ^ 1;
            }
        }
    }

    std::vector<int> run() {
        if (nedge == 0) return mate;
        for (int stage = 0; stage < nvertex; ++stage) {
            std::fill(label.begin(), label.end(), 0);
            std::fill(bestedge.begin(), bestedge.end(), -1);
            for (int b = nvertex; b < 2 * nvertex; ++b) blossombestedges[b].clear();
            std::fill(allowedge.begin(), allowedge.end(), 0);
            queue.clear();
            for (int v = 0; v < nvertex; ++v)
                if (mate[v] == -1 && label[inblossom[v]] == 0) assign_label(v, 1, -1);

            bool augmented = false;
            for (;;) {
                while (!queue.empty() && !augmented) {
                    int v = queue.back();
                    queue.pop_back();
                    check(label[inblossom[v]] == 1, "queue holds non-S vertex");
                    for (int p : neighbend[v]) {
                        int k = p / 2;
                        int w = endpoint[p];
                        if (inblossom[v] == inblossom[w]) continue;
                        long long kslack = 0;
                        if (!allowedge[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge[k] = 1;
                        }
                        if (allowedge[k]) {
                            if (label[inblossom[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label[inblossom[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label[w] == 0) {
                                check(label[inblossom[w]] == 2, "expected T-blossom");
                                label[w] = 2;
                                labelend[w] = p ^ 1;
                            }
                        } else if (label[inblossom[w]] == 1) {
                            int b = inblossom[v];
                            if (bestedge[b] == -1 || kslack < slack(bestedge[b]))
                                bestedge[b] = k;
                        } else if (label[w] == 0) {
                            if (bestedge[w] == -1 || kslack < slack(bestedge[w]))
                                bestedge[w] = k;
                        }
                    }
                }
                if (augmented) break;

                // No augmenting path; adjust dual variables.
                int deltatype = -1;
                long long delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;

                if (!maxcardinality) {
                    deltatype = 1;
                    delta = *std::min_element(dualvar.begin(), dualvar.begin() + nvertex);
                }
                for (int v = 0; v < nvertex; ++v) {
                    if (label[inblossom[v]] == 0 && bestedge[v] != -1) {
                        long long d = slack(bestedge[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nvertex; ++b) {
                    if (blossomparent[b] == -1 && label[b] == 1 && bestedge[b] != -1) {
                        long long kslack = slack(bestedge[b]);
                        check(kslack % 2 == 0, "odd S-S slack");
                        long long d = kslack / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge[b];
                        }
                    }
                }
                for (int b = nvertex; b < 2 * nvertex; ++b) {
                    if (blossombase[b] >= 0 && blossomparent[b] == -1 &&
                        label[b] == 2 && (deltatype == -1 || dualvar[b] < delta)) {
                        delta = dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    // Max-cardinality optimum reached.
                    check(maxcardinality, "stuck without max_cardinality");
                    deltatype = 1;
                    delta = std::max<long long>(
                        0, *std::min_element(dualvar.begin(), dualvar.begin() + nvertex));
                }

                for (int v = 0; v < nvertex; ++v) {
                    if (label[inblossom[v]] == 1)
                        dualvar[v] -= delta;
                    else if (label[inblossom[v]] == 2)
                        dualvar[v] += delta;
                }
                for (int b = nvertex; b < 2 * nvertex; ++b) {
                    if (blossombase[b] >= 0 && blossomparent[b] == -1) {
                        if (label[b] == 1)
                            dualvar[b] += delta;
                        else if (label[b] == 2)
                            dualvar[b] -= delta;
                    }
                }

                if (deltatype == 1) break;
                if (deltatype == 2) {
                    allowedge[deltaedge] = 1;
                    int i = edges[deltaedge].u;
                    if (label[inblossom[i]] == 0) i = edges[deltaedge].v;
                    check(label[inblossom[i]] == 1, "delta2 edge without S end");
                    queue.push_back(i);
                } else if (deltatype == 3) {
                    allowedge[deltaedge] = 1;
                    check(label[inblossom[edges[deltaedge].u]] == 1,
                          "delta3 edge without S end");
                    queue.push_back(edges[deltaedge].u);
                } else if (deltatype == 4) {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;

            for (int b = nvertex; b < 2 * nvertex; ++b) {
                if (blossomparent[b] == -1 && blossombase[b] >= 0 && label[b] == 1 &&
                    dualvar[b] == 0)
                    expand_blossom(b, true);
            }
        }

        std::vector<int> out(nvertex, -1);
        for (int v = 0; v < nvertex; ++v)
            if (mate[v] >= 0) out[v] = endpoint[mate[v]];
        for (int v = 0; v < nvertex; ++v)
            check(out[v] == -1 || out[out[v]] == v, "asymmetric matching");
        return out;
    }
};

} // namespace

std::vector<int> max_weight_matching(int n, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality) {
    if (n < 0) throw InputError("matching: negative vertex count");
    if (n == 0) return {};
    Blossom state(n, edges, max_cardinality);
    return state.run();
}

std::vector<int> min_weight_perfect_matching(int n,
                                             const std::vector<WeightedEdge>& edges) {
    std::vector<WeightedEdge> negated = edges;
    for (WeightedEdge& e : negated) e.weight = -e.weight;
    std::vector<int> mate = max_weight_matching(n, negated, true);
    for (int v = 0; v < n; ++v)
        if (mate[v] == -1) throw DomainError("no perfect matching exists");
    return mate;
}

} // namespace graft
