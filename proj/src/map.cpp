#include "wham/map.hpp"

#include "wham/error.hpp"

#include <string>
#include <vector>

namespace wham {

PlanarMap PlanarMap::build(std::vector<std::vector<Dart>> vertex_rotations) {
    PlanarMap m;
    m.rotations_ = std::move(vertex_rotations);

    std::size_t n = 0;
    for (const auto& rot : m.rotations_) n += rot.size();
    if (n == 0) raise(ErrorKind::Disconnected, "map has no darts");
    if (n % 2 != 0)
        raise(ErrorKind::DanglingDart, "odd number of darts (" + std::to_string(n) + ")");

    m.sigma_.assign(n, 0);
    m.vertex_of_.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (VertexId v = 0; v < m.rotations_.size(); ++v) {
        const auto& rot = m.rotations_[v];
        if (rot.empty())
            raise(ErrorKind::Disconnected, "vertex " + std::to_string(v) + " is isolated");
        for (std::size_t i = 0; i < rot.size(); ++i) {
            Dart d = rot[i];
            if (d >= n)
                raise(ErrorKind::DanglingDart,
                      "dart " + std::to_string(d) + " out of range 0.." + std::to_string(n - 1));
            if (seen[d])
                raise(ErrorKind::DanglingDart, "dart " + std::to_string(d) + " appears twice");
            seen[d] = 1;
            m.vertex_of_[d] = v;
            m.sigma_[d] = rot[(i + 1) % rot.size()];
        }
    }

    for (Dart d = 0; d < n; d += 2)
        if (m.vertex_of_[d] == m.vertex_of_[d + 1])
            raise(ErrorKind::LoopEdge,
                  "edge " + std::to_string(d / 2) + " is a loop at vertex " +
                      std::to_string(m.vertex_of_[d]));

    // connectivity: single orbit of <alpha, sigma> on darts
    {
        std::vector<char> reached(n, 0);
        std::vector<Dart> stack = {0};
        reached[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (Dart next : {m.sigma_[d], static_cast<Dart>(d ^ 1)}) {
                if (!reached[next]) {
                    reached[next] = 1;
                    ++count;
                    stack.push_back(next);
                }
            }
        }
        if (count != n) raise(ErrorKind::Disconnected, "map is not connected");
    }

    // face orbits of phi(d) = sigma(alpha(d)); ascending scan gives faces
    // sorted by minimal dart, each cycle starting at it
    m.faces_.face_of.assign(n, 0);
    {
        std::vector<char> visited(n, 0);
        for (Dart d = 0; d < n; ++d) {
            if (visited[d]) continue;
            std::vector<Dart> cycle;
            Dart cur = d;
            do {
                visited[cur] = 1;
                m.faces_.face_of[cur] = static_cast<FaceId>(m.faces_.faces.size());
                cycle.push_back(cur);
                cur = m.sigma_[cur ^ 1];
            } while (cur != d);
            m.faces_.faces.push_back(std::move(cycle));
        }
    }

    long long euler = static_cast<long long>(m.num_vertices()) -
                      static_cast<long long>(m.num_edges()) +
                      static_cast<long long>(m.num_faces());
    if (euler != 2)
        raise(ErrorKind::NonSphere,
              "V - E + F = " + std::to_string(euler) + ", expected 2 (genus 0)");

    for (EdgeId e = 0; e < m.num_edges(); ++e)
        if (m.faces_.face_of[2 * e] == m.faces_.face_of[2 * e + 1])
            raise(ErrorKind::Bridge, "edge " + std::to_string(e) + " bounds one face twice");

    m.dual_.reserve(m.num_edges());
    for (EdgeId e = 0; e < m.num_edges(); ++e)
        m.dual_.push_back({m.faces_.face_of[2 * e], m.faces_.face_of[2 * e + 1]});

    return m;
}

bool PlanarMap::is_cubic() const {
    for (const auto& rot : rotations_)
        if (rot.size() != 3) return false;
    return true;
}

} // namespace wham
