#include "visgame/splinegon/game.h"

#include <algorithm>
#include <limits>
#include <random>
#include <tuple>

namespace visgame::splinegon {

namespace {

constexpr double tol = 10 * eps;

int side_mask(int turn) { return turn > 0 ? LeftSide : RightSide; }

/// Distance from p to segment ab.
double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 e = b - a;
    const double ee = dot(e, e);
    if (ee == 0) return dist(p, a);
    const double s = std::clamp(dot(p - a, e) / ee, 0.0, 1.0);
    return dist(p, a + s * e);
}

/// Parameter t where the ray origin + t*u crosses segment ab, if it does.
std::optional<double> ray_hits_segment(Vec2 origin, Vec2 u, Vec2 a, Vec2 b) {
    const Vec2 e = b - a;
    const double len = norm(e);
    if (len <= tol) return std::nullopt;
    const double denom = cross(u, e);
    if (std::abs(denom) <= 1e-9 * len) return std::nullopt;
    const double t = cross(a - origin, e) / denom;
    const double lambda = cross(a - origin, u) / denom;
    const double slack = tol / len;
    if (lambda < -slack || lambda > 1 + slack) return std::nullopt;
    return t;
}

/// Direction of travel at the start of a path piece.
Vec2 piece_direction(const Splinegon& region, const PathPiece& piece) {
    if (!piece.arc) return unit(piece.to - piece.from);
    const ArcEdge& e = region.edge(*piece.arc);
    const double s0 = e.project(piece.from).first, s1 = e.project(piece.to).first;
    const Vec2 t = e.tangent_at(s0);
    return s1 >= s0 ? t : -t;
}

/// Turn of the path at the start of a piece, seen from direction u.
int piece_turn(const Splinegon& region, const PathPiece& piece, Vec2 at, Vec2 u) {
    if (piece.arc) return side(at, u, region.edge(*piece.arc).center, 0) > 0 ? 1 : -1;
    return cross(u, piece.to - piece.from) > 0 ? 1 : -1;
}

/// Sub-edge of e between parameters s0 <= s1, with exact endpoints a and b.
ArcEdge sub_edge(const ArcEdge& e, Vec2 a, Vec2 b) {
    if (!e.is_arc()) return ArcEdge::segment(a, b);
    return ArcEdge::arc(a, b, e.center, e.ccw);
}

/// Boundary chain of edges from point x to point y, walking forward.
std::vector<ArcEdge> boundary_chain(const std::vector<ArcEdge>& g, std::size_t ex, double sx, Vec2 x, std::size_t ey,
                                    double sy, Vec2 y) {
    std::vector<ArcEdge> out;
    if (ex == ey && sx <= sy) {
        out.push_back(sub_edge(g[ex], x, y));
        return out;
    }
    out.push_back(sub_edge(g[ex], x, g[ex].to));
    for (std::size_t k = (ex + 1) % g.size(); k != ey; k = (k + 1) % g.size()) out.push_back(g[k]);
    out.push_back(sub_edge(g[ey], g[ey].from, y));
    return out;
}

std::vector<ArcEdge> drop_short(std::vector<ArcEdge> edges) {
    std::erase_if(edges, [](const ArcEdge& e) { return dist(e.from, e.to) <= tol; });
    return edges;
}

/// The two pieces of a region cut along the interior chord pq.
std::pair<Splinegon, Splinegon> split_region(const Splinegon& g, Vec2 p, Vec2 q) {
    const auto [ep, sp] = g.locate(p);
    const auto [eq, sq] = g.locate(q);
    std::vector<ArcEdge> a = boundary_chain(g.edges(), eq, sq, q, ep, sp, p);
    a.push_back(ArcEdge::segment(p, q));
    std::vector<ArcEdge> b = boundary_chain(g.edges(), ep, sp, p, eq, sq, q);
    b.push_back(ArcEdge::segment(q, p));
    return {Splinegon::unchecked(drop_short(std::move(a))), Splinegon::unchecked(drop_short(std::move(b)))};
}

}  // namespace

SplineArena::SplineArena(Splinegon region)
    : region_(std::move(region)), graph_(region_), tangents_(splinegon::common_tangents(region_)) {}

std::string to_string(StopKind kind) {
    switch (kind) {
    case StopKind::CommonTangent: return "common_tangent";
    case StopKind::EndpointTangent: return "endpoint_tangent";
    case StopKind::RobberExit: return "robber_exit";
    case StopKind::BoundaryTouch: return "boundary_touch";
    case StopKind::BoundaryExit: return "boundary_exit";
    case StopKind::Vertex: return "vertex";
    case StopKind::Capture: return "capture";
    }
    return "?";
}

std::string to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::None: return "none";
    case CaseTag::Case1a: return "1a";
    case CaseTag::Case1b: return "1b";
    case CaseTag::Case2a: return "2a";
    case CaseTag::Case2b: return "2b";
    }
    return "?";
}

std::string to_string(EventKind kind) {
    switch (kind) {
    case EventKind::CVertex: return "c_vertex";
    case EventKind::CBTangent: return "c_boundary_tangent";
    case EventKind::EVertex: return "e_vertex";
    case EventKind::ECommonTangentEndpoint: return "e_common_tangent_endpoint";
    case EventKind::EBend: return "e_bend";
    }
    return "?";
}

CopMove cop_move_splinegon(const SplineArena& arena, Vec2 cop, Vec2 robber) {
    const Splinegon& region = arena.region();
    CopMove move;
    move.from = cop;
    if (region.sees(cop, robber)) {
        move.to = robber;
        move.stop = StopKind::Capture;
        return move;
    }
    const SplinePath path = arena.graph().shortest_path(cop, robber);
    if (path.pieces.empty()) throw StrategyViolation("cop move: empty path to an invisible robber");
    const PathPiece& first = path.pieces.front();
    move.ell = piece_direction(region, first);
    if (first.arc) {
        move.starts_on_curve = true;
        move.b = cop;
        move.turn = piece_turn(region, first, cop, move.ell);
    } else {
        move.b = first.to;
        if (path.pieces.size() < 2) throw StrategyViolation("cop move: straight path to an invisible robber");
        move.turn = piece_turn(region, path.pieces[1], move.b, move.ell);
    }

    const std::optional<std::size_t> b_vertex = region.vertex_at(move.b);
    if (b_vertex) {
        // Of the two curves at the vertex, the one the path leaves along.
        const std::size_t out = *b_vertex, in = region.prev(out);
        const Vec2 t_out = region.edge(out).tangent_at(0), t_in = -region.edge(in).tangent_at(1);
        const double a_out = dot(t_out, move.ell), a_in = dot(t_in, move.ell);
        move.gamma = a_out >= a_in ? out : in;
        move.gamma_ambiguous = std::abs(cross(t_out, move.ell)) <= 1e-9 && std::abs(cross(t_in, move.ell)) <= 1e-9;
    } else {
        move.gamma = region.locate(move.b).first;
    }

    if (b_vertex && !near(move.b, cop, tol)) {
        move.to = move.b;
        move.stop = StopKind::Vertex;
        return move;
    }

    const Vec2 u = move.ell;
    const double t_b = dist(cop, move.b);
    struct Stop {
        double t;
        StopKind kind;
        std::optional<StopLine> witness;
        std::optional<std::size_t> bay_vertex;
    };
    std::vector<Stop> stops;
    const double extent = region.ray_extent(cop, u);
    for (double t : region.line_contacts(cop, u))
        if (t > t_b + tol && t <= extent + tol) {
            stops.push_back({t, t >= extent - tol ? StopKind::BoundaryExit : StopKind::BoundaryTouch, {}, {}});
            break;
        }
    if (extent > t_b + tol) stops.push_back({extent, StopKind::BoundaryExit, {}, {}});
    for (const StopLine& line : arena.common_tangents()) {
        const std::optional<double> t = ray_hits_segment(cop, u, line.a, line.b);
        if (!t || *t <= t_b + tol || *t > extent + tol) continue;
        stops.push_back({*t,
                         line.kind == StopLineKind::EndpointTangent ? StopKind::EndpointTangent
                                                                    : StopKind::CommonTangent,
                         line,
                         {}});
    }
    for (const ExitLine& exit : robber_exit_lines(robber, cop, u, region))
        if (exit.ray_t > t_b + tol && exit.ray_t <= extent + tol)
            stops.push_back({exit.ray_t, StopKind::RobberExit, exit.line, exit.bay_vertex});
    if (stops.empty())
        throw StrategyViolation("cop move: no stopping point past " + to_string(move.b) + " from " + to_string(cop));

    const auto key = [](const Stop& s) {
        const Vec2 w = s.witness ? s.witness->a : Vec2{};
        const Vec2 z = s.witness ? s.witness->b : Vec2{};
        return std::make_tuple(static_cast<int>(s.kind), w, z);
    };
    const double t_min = std::min_element(stops.begin(), stops.end(), [](const Stop& x, const Stop& y) {
                             return x.t < y.t;
                         })->t;
    const Stop* best = nullptr;
    for (const Stop& s : stops)
        if (s.t <= t_min + tol && (!best || key(s) < key(*best))) best = &s;
    move.to = cop + best->t * u;
    move.stop = best->kind;
    move.witness = best->witness;
    move.bay_vertex = best->bay_vertex;
    return move;
}

SplineActiveRegion active_region_splinegon(const SplineArena& arena, const CopMove& move, Vec2 robber) {
    const Splinegon& region = arena.region();
    SplineActiveRegion out;
    out.cut_start = move.b;
    const Vec2 back = -move.ell;
    const int stop_mask = side_mask(move.turn);
    const double extent = region.ray_extent(move.b, back);
    const std::vector<double> contacts = region.line_contacts(move.b, back);
    double end_t = extent;
    for (double t : contacts) {
        if (t <= tol) continue;
        if (t > extent + tol) break;
        if (region.local_sides(move.b + t * back, back) & stop_mask) {
            end_t = std::min(t, extent);
            break;
        }
    }
    out.cut_end = move.b + end_t * back;

    std::vector<double> marks{0};
    for (double t : contacts)
        if (t > tol && t < end_t - tol) marks.push_back(t);
    marks.push_back(end_t);
    for (std::size_t k = 0; k + 1 < marks.size(); ++k) {
        const Vec2 mid = move.b + 0.5 * (marks[k] + marks[k + 1]) * back;
        if (region.contains(mid) && region.boundary_distance(mid) > tol)
            out.stretches.emplace_back(move.b + marks[k] * back, move.b + marks[k + 1] * back);
    }

    // Away from the stop side: the right of the backward cut for a left turn.
    const Vec2 away = move.turn > 0 ? -perp(back) : perp(back);
    Splinegon current = region;
    for (const auto& [p, q] : out.stretches) {
        const Vec2 mid = 0.5 * (p + q);
        if (!current.contains(mid) || current.boundary_distance(mid) <= tol) continue;
        auto [a, b] = split_region(current, p, q);
        const bool r_on_cut = segment_distance(robber, p, q) <= 1e-7 * std::max(1.0, region.scale());
        const Vec2 probe = r_on_cut ? mid + 1e-6 * std::max(1.0, region.scale()) * away : robber;
        const bool in_a = a.contains(probe), in_b = b.contains(probe);
        if (in_a && !in_b) current = std::move(a);
        else if (in_b && !in_a) current = std::move(b);
        else {
            // Both or neither: keep the piece on the side away from the stop side.
            const Vec2 side_probe = mid + 1e-6 * std::max(1.0, region.scale()) * away;
            current = a.contains(side_probe) ? std::move(a) : std::move(b);
        }
    }
    out.area = current.area();
    out.region = std::move(current);
    return out;
}

std::vector<Vec2> robber_candidates(const Splinegon& region) { return link_samples(region); }

Vec2 SplineRobber::place(const SplineView& view) {
    const Splinegon& region = view.arena->region();
    const std::vector<Vec2> cands = robber_candidates(region);
    const Vec2* best = nullptr;
    bool best_hidden = false;
    for (const Vec2& c : cands) {
        const bool hidden = !region.sees(view.cop, c);
        if (!best || (hidden && !best_hidden) ||
            (hidden == best_hidden && dist(c, view.cop) > dist(*best, view.cop) + eps)) {
            best = &c;
            best_hidden = hidden;
        }
    }
    return *best;
}

Vec2 BoundaryCyclingRobber::move(const SplineView& view) {
    const Splinegon& region = view.arena->region();
    std::vector<Vec2> anchors;
    for (const ArcEdge& e : region.edges())
        for (double s : {0.0, 0.25, 0.5, 0.75}) anchors.push_back(e.point_at(s));
    const std::size_t m = anchors.size();
    std::size_t here = 0;
    for (std::size_t k = 1; k < m; ++k)
        if (dist(anchors[k], view.robber) < dist(anchors[here], view.robber)) here = k;
    const auto usable = [&](Vec2 p) { return region.sees(view.robber, p) && !region.sees(view.cop, p); };
    for (int dir : {1, -1}) {
        std::optional<Vec2> best;
        for (std::size_t off = 1; off <= m / 2; ++off) {
            const Vec2 p = anchors[(here + (dir > 0 ? off : m - off)) % m];
            if (usable(p)) best = p;
        }
        if (best) return *best;
    }
    return view.robber;
}

Vec2 BayHoppingRobber::move(const SplineView& view) {
    const Splinegon& region = view.arena->region();
    std::optional<Vec2> best;
    for (Vec2 c : robber_candidates(region))
        if (region.sees(view.robber, c) && !region.sees(view.cop, c) &&
            (!best || dist(c, view.cop) > dist(*best, view.cop) + eps))
            best = c;
    return best ? *best : view.robber;
}

std::size_t RandomVisibleRobber::draw(std::size_t count) {
    std::mt19937_64 rng(seed_ * 0x9E3779B97F4A7C15ULL + draws_++);
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

Vec2 RandomVisibleRobber::place(const SplineView& view) {
    const Splinegon& region = view.arena->region();
    std::vector<Vec2> hidden;
    for (Vec2 c : robber_candidates(region))
        if (!region.sees(view.cop, c)) hidden.push_back(c);
    if (hidden.empty()) return SplineRobber::place(view);
    return hidden[draw(hidden.size())];
}

Vec2 RandomVisibleRobber::move(const SplineView& view) {
    const Splinegon& region = view.arena->region();
    std::vector<Vec2> visible, hidden;
    for (Vec2 c : robber_candidates(region))
        if (region.sees(view.robber, c)) {
            visible.push_back(c);
            if (!region.sees(view.cop, c)) hidden.push_back(c);
        }
    const std::vector<Vec2>& pool = hidden.empty() ? visible : hidden;
    if (pool.empty()) return view.robber;
    return pool[draw(pool.size())];
}

bool SplineTrace::clean() const {
    bool budgets = true;
    for (std::size_t k = 0; k < event_kind_count; ++k) budgets = budgets && event_counts[k] <= event_budgets[k];
    return captured && case_1b_count == 0 && case_2a_without_tangency == 0 && doubling_back == 0 && regions_shrink &&
           robber_confined && !robber_crossed_cut && rounds_without_event == 0 && budgets;
}

int splinegon_round_cap(const Splinegon& region, int factor) {
    const int n = static_cast<int>(region.size());
    return factor * (2 * n * n + 2 * n + region.link_diameter_bound());
}

namespace {

bool on_cut(Vec2 x, const SplineActiveRegion& act) {
    for (const auto& [p, q] : act.stretches)
        if (segment_distance(x, p, q) <= tol) return true;
    return false;
}

/// x lies in the part of R_i that R_{i+1} gives up (cut boundaries assigned
/// to the later region).
bool in_lost_part(Vec2 x, const SplineActiveRegion& now, const SplineActiveRegion& next) {
    if (!now.region.contains(x) || on_cut(x, now)) return false;
    return !next.region.contains(x) || on_cut(x, next);
}

/// Boundary contact on the turn side of the segment from c to b, if any.
std::optional<Vec2> far_side_contact(const Splinegon& region, Vec2 c, Vec2 b, int turn) {
    if (near(c, b, tol)) return std::nullopt;
    const Vec2 d = b - c;
    const double len = norm(d);
    const Vec2 u = (1.0 / len) * d;
    std::vector<double> ts = region.line_contacts(c, u);
    for (double t : ts) {
        if (t < -tol || t > len + tol) continue;
        const Vec2 x = c + t * u;
        if (region.local_sides(x, u) & side_mask(turn)) return x;
    }
    return std::nullopt;
}

void classify(SplineTrace& trace) {
    auto& rounds = trace.rounds;
    for (std::size_t k = 1; k < rounds.size(); ++k) {
        const CopMove& prev = rounds[k - 1].move;
        const CopMove& cur = rounds[k].move;
        if (prev.stop == StopKind::Capture || cur.stop == StopKind::Capture) continue;
        if (near(prev.from, prev.to, tol) || near(cur.from, cur.to, tol)) continue;
        const int l = prev.turn;
        const Vec2 v1 = unit(prev.to - prev.from), v2 = unit(cur.to - cur.from);
        const double cr = cross(v1, v2), dt = dot(v1, v2);
        if (std::abs(cr) <= 1e-9 && dt < 0) {
            ++trace.doubling_back;
            trace.diagnostics.push_back("round " + std::to_string(rounds[k].round) + ": cop doubles back");
        }
        const bool toward = cr * l > 1e-9;
        const bool same = cur.turn == l;
        rounds[k].case_tag = same ? (toward ? CaseTag::Case1a : CaseTag::Case1b)
                                  : (toward ? CaseTag::Case2a : CaseTag::Case2b);
        if (rounds[k].case_tag == CaseTag::Case1b) {
            ++trace.case_1b_count;
            trace.diagnostics.push_back("round " + std::to_string(rounds[k].round) + ": case 1(b)");
        }
        if (rounds[k].case_tag == CaseTag::Case2a) {
            rounds[k].left_tangency = far_side_contact(trace.region, cur.from, cur.b, l);
            if (!rounds[k].left_tangency) {
                ++trace.case_2a_without_tangency;
                trace.diagnostics.push_back("round " + std::to_string(rounds[k].round) +
                                            ": case 2(a) without a boundary contact on the turn side");
            }
        }
    }
}

void check_shrink(SplineTrace& trace) {
    const double scale = trace.region.scale();
    const SplineRound* prev = nullptr;
    for (const SplineRound& r : trace.rounds) {
        if (!r.active) continue;
        if (prev) {
            if (prev->active->area - r.active->area <= 1e-9 * scale * scale) {
                trace.regions_shrink = false;
                trace.diagnostics.push_back("round " + std::to_string(r.round) + ": active region did not shrink");
            }
            if (!prev->active->region.contains(r.active->cut_start) || !prev->active->region.contains(r.active->cut_end)) {
                trace.regions_shrink = false;
                trace.diagnostics.push_back("round " + std::to_string(r.round) + ": cut leaves the previous region");
            }
        }
        prev = &r;
    }
}

std::vector<ProgressEvent> events_for(const SplineArena& arena, const SplineRound& now, const SplineRound& next,
                                      const std::vector<Vec2>& bends) {
    const Splinegon& region = arena.region();
    const SplineActiveRegion& a = *now.active;
    const SplineActiveRegion& z = *next.active;
    const CopMove& m = now.move;
    std::vector<ProgressEvent> out;
    if (region.vertex_at(m.to)) out.push_back({EventKind::CVertex, {m.to}});
    if (!near(m.to, m.b, tol) && region.on_boundary(m.to, 1e-7 * std::max(1.0, region.scale())) &&
        region.ray_extent(m.to, m.ell) > tol)
        out.push_back({EventKind::CBTangent, {m.b, m.to}});
    for (Vec2 v : region.vertices())
        if (in_lost_part(v, a, z)) {
            out.push_back({EventKind::EVertex, {v}});
            break;
        }
    for (const StopLine& line : arena.common_tangents()) {
        if (near(line.a, line.b, tol) || !a.region.contains(line.a) || !a.region.contains(line.b)) continue;
        if (in_lost_part(line.a, a, z) || in_lost_part(line.b, a, z)) {
            out.push_back({EventKind::ECommonTangentEndpoint, {line.a, line.b}});
            break;
        }
    }
    for (Vec2 p : bends)
        if (in_lost_part(p, a, z)) {
            out.push_back({EventKind::EBend, {p}});
            break;
        }
    return out;
}

void certify(const SplineArena& arena, SplineTrace& trace) {
    const Splinegon& region = arena.region();
    const int n = static_cast<int>(region.size());
    trace.event_budgets = {n, n * n, n, n * n, region.link_diameter_bound()};
    if (!trace.captured) return;
    const Vec2 capture_point = trace.rounds.back().move.from;
    trace.sigma = sampled_link_path(region, trace.cop_start, capture_point);
    const std::vector<Vec2> bends(trace.sigma.size() > 2 ? trace.sigma.begin() + 1 : trace.sigma.end(),
                                  trace.sigma.size() > 2 ? trace.sigma.end() - 1 : trace.sigma.end());
    // Rounds 1..m-1 carry active regions; E_i needs R_{i+1}.
    const int m = trace.capture_round;
    for (int i = 1; i + 1 <= m - 1; ++i) {
        SplineRound& now = trace.rounds[static_cast<std::size_t>(i - 1)];
        const SplineRound& next = trace.rounds[static_cast<std::size_t>(i)];
        if (!now.active || !next.active) continue;
        now.events = events_for(arena, now, next, bends);
        now.events_checked = true;
        for (const ProgressEvent& e : now.events) ++trace.event_counts[static_cast<std::size_t>(e.kind)];
        if (i >= 2 && i <= m - 2 && now.events.empty()) {
            ++trace.rounds_without_event;
            trace.diagnostics.push_back("round " + std::to_string(i) + ": no progress event");
        }
    }
    for (std::size_t k = 0; k < event_kind_count; ++k)
        if (trace.event_counts[k] > trace.event_budgets[k])
            trace.diagnostics.push_back("event " + to_string(static_cast<EventKind>(k)) + " over budget");
}

bool crosses(Vec2 a, Vec2 b, Vec2 p, Vec2 q) {
    const int s1 = side(p, q - p, a), s2 = side(p, q - p, b);
    const int s3 = side(a, b - a, p), s4 = side(a, b - a, q);
    return s1 * s2 < 0 && s3 * s4 < 0;
}

}  // namespace

SplineTrace run_splinegon_game(const SplineArena& arena, SplineRobber& robber, Vec2 cop_start, int max_rounds,
                               std::uint64_t seed, const std::string& family) {
    const Splinegon& region = arena.region();
    SplineTrace trace;
    trace.family = family;
    trace.region = region;
    trace.robber_strategy = robber.name();
    trace.seed = seed;
    trace.max_rounds = max_rounds > 0 ? max_rounds : splinegon_round_cap(region);
    trace.cop_start = cop_start;
    Vec2 cop = cop_start;
    Vec2 r = robber.place({&arena, cop, {}, 0});
    if (!region.contains(r)) throw std::logic_error("robber placed outside the region at " + to_string(r));
    trace.robber_start = r;

    for (int round = 1; round <= trace.max_rounds; ++round) {
        SplineRound rec;
        rec.round = round;
        rec.robber_before = r;
        rec.move = cop_move_splinegon(arena, cop, r);
        cop = rec.move.to;
        if (rec.move.gamma_ambiguous) ++trace.gamma_ambiguous;
        if (rec.move.stop == StopKind::Capture) {
            trace.captured = true;
            trace.capture_round = round;
            trace.rounds.push_back(std::move(rec));
            break;
        }
        rec.active = active_region_splinegon(arena, rec.move, r);
        const Vec2 next = robber.move({&arena, cop, r, round});
        if (!near(next, r, 0) && !region.sees(r, next))
            throw std::logic_error("robber " + robber.name() + " jumped from " + to_string(r) + " to " + to_string(next));
        for (const auto& [p, q] : rec.active->stretches)
            if (crosses(r, next, p, q)) {
                trace.robber_crossed_cut = true;
                trace.diagnostics.push_back("round " + std::to_string(round) + ": robber crossed the cut");
            }
        if (!rec.active->region.contains(next)) {
            trace.robber_confined = false;
            trace.diagnostics.push_back("round " + std::to_string(round) + ": robber left the active region");
        }
        r = next;
        rec.robber = r;
        trace.rounds.push_back(std::move(rec));
    }
    if (!trace.captured) trace.diagnostics.push_back("no capture within " + std::to_string(trace.max_rounds) + " rounds");
    analyze_splinegon_trace(arena, trace);
    return trace;
}

void analyze_splinegon_trace(const SplineArena& arena, SplineTrace& trace) {
    classify(trace);
    check_shrink(trace);
    certify(arena, trace);
}

nlohmann::json spline_trace_to_json(const SplineTrace& trace) {
    using nlohmann::json;
    json rounds = json::array();
    for (const SplineRound& r : trace.rounds) {
        const CopMove& m = r.move;
        json j = {{"round", r.round},
                  {"cop_from", vec_to_json(m.from)},
                  {"cop_to", vec_to_json(m.to)},
                  {"robber_before", vec_to_json(r.robber_before)},
                  {"stop", to_string(m.stop)}};
        if (r.robber) j["robber"] = vec_to_json(*r.robber);
        if (m.stop != StopKind::Capture) {
            j["ell"] = vec_to_json(m.ell);
            j["b"] = vec_to_json(m.b);
            j["gamma"] = m.gamma;
            j["turn"] = m.turn;
            if (m.witness) j["witness"] = stop_line_to_json(*m.witness);
            if (m.bay_vertex) j["bay_vertex"] = *m.bay_vertex;
        }
        if (r.active) {
            json stretches = json::array();
            for (const auto& [p, q] : r.active->stretches) stretches.push_back(json::array({vec_to_json(p), vec_to_json(q)}));
            j["cut"] = json::array({vec_to_json(r.active->cut_start), vec_to_json(r.active->cut_end)});
            j["stretches"] = stretches;
            j["active_area"] = r.active->area;
        }
        j["case"] = to_string(r.case_tag);
        if (r.left_tangency) j["left_tangency"] = vec_to_json(*r.left_tangency);
        if (r.events_checked) {
            json events = json::array();
            for (const ProgressEvent& e : r.events) {
                json w = json::array();
                for (Vec2 p : e.witness) w.push_back(vec_to_json(p));
                events.push_back({{"kind", to_string(e.kind)}, {"witness", w}});
            }
            j["events"] = events;
        }
        rounds.push_back(std::move(j));
    }
    json sigma = json::array();
    for (Vec2 p : trace.sigma) sigma.push_back(vec_to_json(p));
    return {{"family", trace.family},
            {"region", splinegon_to_json(trace.region)},
            {"robber_strategy", trace.robber_strategy},
            {"seed", trace.seed},
            {"cop_start", vec_to_json(trace.cop_start)},
            {"robber_start", vec_to_json(trace.robber_start)},
            {"rounds", rounds},
            {"captured", trace.captured},
            {"capture_round", trace.capture_round},
            {"max_rounds", trace.max_rounds},
            {"case_1b_count", trace.case_1b_count},
            {"case_2a_without_tangency", trace.case_2a_without_tangency},
            {"doubling_back", trace.doubling_back},
            {"gamma_ambiguous", trace.gamma_ambiguous},
            {"regions_shrink", trace.regions_shrink},
            {"robber_confined", trace.robber_confined},
            {"robber_crossed_cut", trace.robber_crossed_cut},
            {"rounds_without_event", trace.rounds_without_event},
            {"event_counts", trace.event_counts},
            {"event_budgets", trace.event_budgets},
            {"sigma", sigma},
            {"diagnostics", trace.diagnostics}};
}

}  // namespace visgame::splinegon
