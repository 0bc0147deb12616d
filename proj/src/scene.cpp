#include "insplan/scene.hpp"

#include "insplan/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace insplan {

namespace {

void check_finite(const Vec3& v, const std::string& file, long line) {
    if (!v.allFinite()) {
        throw ParseError(file, line, "non-finite coordinate");
    }
}

void finalize(Scene& scene, const std::string& file) {
    if (scene.vertices.empty()) {
        throw ParseError(file, 0, "no vertices");
    }
    for (const Vec3& v : scene.vertices) scene.bbox.expand(v);
    if (scene.triangles) {
        const int n = static_cast<int>(scene.vertices.size());
        long idx = 0;
        for (const auto& tri : *scene.triangles) {
            ++idx;
            for (int k : tri) {
                if (k < 0 || k >= n) {
                    throw ParseError(file, idx,
                                     "vertex index " + std::to_string(k) + " of " +
                                         std::to_string(n) + " (face " + std::to_string(idx) +
                                         ")");
                }
            }
        }
    }
}

double parse_double(const std::string& tok, const std::string& file, long line) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(file, line, "expected a number, got \"" + tok + "\"");
    }
    if (pos != tok.size()) {
        throw ParseError(file, line, "trailing garbage in number \"" + tok + "\"");
    }
    if (!std::isfinite(v)) {
        throw ParseError(file, line, "non-finite coordinate");
    }
    return v;
}

Scene load_obj(std::istream& in, const std::string& file) {
    Scene scene;
    scene.triangles.emplace();
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "v") {
            std::string xs, ys, zs;
            if (!(ls >> xs >> ys >> zs)) {
                throw ParseError(file, lineno, "vertex needs 3 coordinates");
            }
            Vec3 v(parse_double(xs, file, lineno), parse_double(ys, file, lineno),
                   parse_double(zs, file, lineno));
            check_finite(v, file, lineno);
            scene.vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<int> idx;
            std::string ref;
            while (ls >> ref) {
                // "i", "i/j", "i//k", "i/j/k" — only the vertex index matters.
                const std::string head = ref.substr(0, ref.find('/'));
                int i = 0;
                try {
                    i = std::stoi(head);
                } catch (const std::exception&) {
                    throw ParseError(file, lineno, "bad face index \"" + ref + "\"");
                }
                if (i < 0) {
                    i = static_cast<int>(scene.vertices.size()) + i;  // relative index
                } else {
                    i -= 1;  // OBJ is 1-based
                }
                idx.push_back(i);
            }
            if (idx.size() < 3) {
                throw ParseError(file, lineno, "face needs at least 3 indices");
            }
            for (size_t k = 2; k < idx.size(); ++k) {
                scene.triangles->push_back({idx[0], idx[k - 1], idx[k]});
            }
        }
        // vt/vn/usemtl/etc. ignored
    }
    finalize(scene, file);
    return scene;
}

Scene load_xyz(std::istream& in, const std::string& file) {
    Scene scene;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string xs, ys, zs;
        if (!(ls >> xs)) continue;  // blank line
        if (xs[0] == '#') continue;
        if (!(ls >> ys >> zs)) {
            throw ParseError(file, lineno, "point needs 3 coordinates");
        }
        Vec3 v(parse_double(xs, file, lineno), parse_double(ys, file, lineno),
               parse_double(zs, file, lineno));
        check_finite(v, file, lineno);
        scene.vertices.push_back(v);
    }
    finalize(scene, file);
    return scene;
}

struct PlyProperty {
    std::string type;  // float, double, int, uchar, ...
    std::string name;
    bool is_list = false;
    std::string count_type;
};

struct PlyElement {
    std::string name;
    long count = 0;
    std::vector<PlyProperty> props;
};

size_t ply_type_size(const std::string& t, const std::string& file, long line) {
    if (t == "char" || t == "uchar" || t == "int8" || t == "uint8") return 1;
    if (t == "short" || t == "ushort" || t == "int16" || t == "uint16") return 2;
    if (t == "int" || t == "uint" || t == "int32" || t == "uint32" || t == "float" ||
        t == "float32")
        return 4;
    if (t == "double" || t == "float64") return 8;
    throw ParseError(file, line, "unsupported PLY type \"" + t + "\"");
}

double read_binary_scalar(std::istream& in, const std::string& t, const std::string& file) {
    unsigned char buf[8];
    const size_t n = ply_type_size(t, file, 0);
    if (!in.read(reinterpret_cast<char*>(buf), static_cast<std::streamsize>(n))) {
        throw ParseError(file, 0, "truncated binary payload");
    }
    if (t == "char" || t == "int8") return static_cast<int8_t>(buf[0]);
    if (t == "uchar" || t == "uint8") return buf[0];
    auto le = [&](auto value) {
        std::memcpy(&value, buf, sizeof(value));
        return value;
    };
    if (t == "short" || t == "int16") return le(int16_t{});
    if (t == "ushort" || t == "uint16") return le(uint16_t{});
    if (t == "int" || t == "int32") return le(int32_t{});
    if (t == "uint" || t == "uint32") return le(uint32_t{});
    if (t == "float" || t == "float32") return le(float{});
    return le(double{});
}

Scene load_ply(std::istream& in, const std::string& file) {
    std::string line;
    long lineno = 0;
    std::getline(in, line);
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!in || line != "ply") {
        throw ParseError(file, 1, "missing PLY magic");
    }
    ++lineno;

    bool binary = false;
    std::vector<PlyElement> elements;
    while (std::getline(in, line)) {
        ++lineno;
        // Header lines may carry \r from CRLF files.
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "comment" || tag == "obj_info") continue;
        if (tag == "format") {
            std::string fmt;
            ls >> fmt;
            if (fmt == "ascii") {
                binary = false;
            } else if (fmt == "binary_little_endian") {
                binary = true;
            } else {
                throw ParseError(file, lineno, "unsupported PLY format \"" + fmt + "\"");
            }
        } else if (tag == "element") {
            PlyElement el;
            ls >> el.name >> el.count;
            elements.push_back(el);
        } else if (tag == "property") {
            if (elements.empty()) throw ParseError(file, lineno, "property before element");
            PlyProperty p;
            std::string t;
            ls >> t;
            if (t == "list") {
                p.is_list = true;
                ls >> p.count_type >> p.type >> p.name;
            } else {
                p.type = t;
                ls >> p.name;
            }
            elements.back().props.push_back(p);
        } else if (tag == "end_header") {
            break;
        } else {
            throw ParseError(file, lineno, "unexpected header line \"" + line + "\"");
        }
    }

    Scene scene;
    bool has_faces = false;
    for (const auto& el : elements) {
        if (el.name == "face" && el.count > 0) has_faces = true;
    }
    if (has_faces) scene.triangles.emplace();

    auto read_ascii_row = [&](const PlyElement& el, std::vector<double>& scalars,
                              std::vector<long>& list) {
        ++lineno;
        if (!std::getline(in, line)) throw ParseError(file, lineno, "truncated payload");
        std::istringstream ls(line);
        for (const auto& p : el.props) {
            if (p.is_list) {
                long n = 0;
                if (!(ls >> n)) throw ParseError(file, lineno, "bad list count");
                list.clear();
                for (long k = 0; k < n; ++k) {
                    long v = 0;
                    if (!(ls >> v)) throw ParseError(file, lineno, "bad list entry");
                    list.push_back(v);
                }
            } else {
                double v = 0;
                if (!(ls >> v)) throw ParseError(file, lineno, "bad scalar");
                scalars.push_back(v);
            }
        }
    };

    for (const auto& el : elements) {
        if (el.name == "vertex") {
            int xi = -1, yi = -1, zi = -1;
            for (size_t k = 0; k < el.props.size(); ++k) {
                if (el.props[k].is_list) {
                    throw ParseError(file, lineno, "list property on vertex element");
                }
                if (el.props[k].name == "x") xi = static_cast<int>(k);
                if (el.props[k].name == "y") yi = static_cast<int>(k);
                if (el.props[k].name == "z") zi = static_cast<int>(k);
            }
            if (xi < 0 || yi < 0 || zi < 0) {
                throw ParseError(file, lineno, "vertex element lacks x/y/z");
            }
            for (long i = 0; i < el.count; ++i) {
                std::vector<double> scalars;
                std::vector<long> list;
                if (binary) {
                    for (const auto& p : el.props) {
                        scalars.push_back(read_binary_scalar(in, p.type, file));
                    }
                } else {
                    read_ascii_row(el, scalars, list);
                }
                Vec3 v(scalars[xi], scalars[yi], scalars[zi]);
                check_finite(v, file, binary ? i + 1 : lineno);
                scene.vertices.push_back(v);
            }
        } else if (el.name == "face") {
            for (long i = 0; i < el.count; ++i) {
                std::vector<long> idx;
                if (binary) {
                    for (const auto& p : el.props) {
                        if (p.is_list) {
                            const long n =
                                static_cast<long>(read_binary_scalar(in, p.count_type, file));
                            idx.clear();
                            for (long k = 0; k < n; ++k) {
                                idx.push_back(
                                    static_cast<long>(read_binary_scalar(in, p.type, file)));
                            }
                        } else {
                            read_binary_scalar(in, p.type, file);
                        }
                    }
                } else {
                    std::vector<double> scalars;
                    read_ascii_row(el, scalars, idx);
                }
                if (idx.size() < 3) {
                    throw ParseError(file, binary ? i + 1 : lineno, "face needs >= 3 indices");
                }
                for (size_t k = 2; k < idx.size(); ++k) {
                    scene.triangles->push_back({static_cast<int>(idx[0]),
                                                static_cast<int>(idx[k - 1]),
                                                static_cast<int>(idx[k])});
                }
            }
        } else {
            // Skip unknown elements.
            for (long i = 0; i < el.count; ++i) {
                if (binary) {
                    for (const auto& p : el.props) {
                        if (p.is_list) {
                            const long n =
                                static_cast<long>(read_binary_scalar(in, p.count_type, file));
                            for (long k = 0; k < n; ++k) read_binary_scalar(in, p.type, file);
                        } else {
                            read_binary_scalar(in, p.type, file);
                        }
                    }
                } else {
                    std::vector<double> scalars;
                    std::vector<long> list;
                    read_ascii_row(el, scalars, list);
                }
            }
        }
    }
    finalize(scene, file);
    return scene;
}

}  // namespace

std::optional<SceneFormat> scene_format_from_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".obj") return SceneFormat::obj;
    if (ext == ".ply") return SceneFormat::ply;
    if (ext == ".xyz") return SceneFormat::xyz;
    return std::nullopt;
}

Scene load_scene(const std::filesystem::path& path, SceneFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open scene file " + path.string());
    }
    const std::string file = path.string();
    switch (format) {
        case SceneFormat::obj:
            return load_obj(in, file);
        case SceneFormat::ply:
            return load_ply(in, file);
        case SceneFormat::xyz:
            return load_xyz(in, file);
    }
    throw InputError("unknown scene format");
}

}  // namespace insplan
