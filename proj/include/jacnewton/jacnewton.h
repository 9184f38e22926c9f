/* C interface to the jacnewton library.
 *
 * Every function returns a jn_status. On failure the message and the
 * symbolic error code of the most recent failure on the calling thread are
 * available from jn_last_error_message() and jn_last_error_code(). Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with jn_string_free; handles with their matching *_free. */
#ifndef JACNEWTON_H
#define JACNEWTON_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define JN_API __declspec(dllexport)
#else
#define JN_API __attribute__((visibility("default")))
#endif

typedef enum {
  JN_OK = 0,
  JN_ERR_SYNTAX = 1,           /* malformed polynomial, polygon, sequence or JSON */
  JN_ERR_DOMAIN = 2,           /* well-formed input outside an operation's domain */
  JN_ERR_INVALID_ARGUMENT = 3, /* null pointer or unusable argument */
  JN_ERR_IO = 4,
  JN_ERR_INTERNAL = 5
} jn_status;

typedef enum { JN_FORMAT_TEXT = 0, JN_FORMAT_JSON = 1 } jn_format;

typedef struct jn_poly jn_poly;
typedef struct jn_polygon jn_polygon;

JN_API const char* jn_version(void);
JN_API const char* jn_last_error_message(void);
/* Symbolic code such as "not_squarefree"; "ok" after a success. */
JN_API const char* jn_last_error_code(void);
/* Renders the last error as text or as {"error":{"code":..,"message":..}}. */
JN_API jn_status jn_last_error_render(jn_format format, char** out);
JN_API void jn_string_free(char* s);

JN_API jn_status jn_poly_parse(const char* text, jn_poly** out);
JN_API void jn_poly_free(jn_poly* f);
JN_API jn_status jn_poly_to_string(const jn_poly* f, char** out);

/* Text ("{6|1}+{14|2}") or JSON polygon. */
JN_API jn_status jn_polygon_parse(const char* text, jn_polygon** out);
JN_API void jn_polygon_free(jn_polygon* p);
JN_API jn_status jn_polygon_render(const jn_polygon* p, jn_format format, char** out);
JN_API jn_status jn_polygon_svg(const jn_polygon* p, char** out);
JN_API jn_status jn_polygon_equal(const jn_polygon* a, const jn_polygon* b, int* equal);

/* Pipeline on a curve f(x,y). `max_shear` bounds the shear search. When
 * `polygon` is non-null it receives the jacobian polygon. */
JN_API jn_status jn_njp(const jn_poly* f, unsigned max_shear, jn_format format, char** report,
                        jn_polygon** polygon);
JN_API jn_status jn_discriminant(const jn_poly* f, unsigned max_shear, jn_format format,
                                 char** report, jn_polygon** polygon);
JN_API jn_status jn_polar(const jn_poly* f, unsigned max_shear, jn_format format, char** report,
                          jn_polygon** polygon);
JN_API jn_status jn_irreducible(const jn_poly* f, unsigned max_shear, jn_format format,
                                char** report, jn_polygon** polygon);
/* Writes 1 or 0 to *irreducible. */
JN_API jn_status jn_is_irreducible(const jn_poly* f, unsigned max_shear, int* irreducible);

/* Polygon calculus. */
JN_API jn_status jn_criteria(const jn_polygon* p, jn_format format, char** report);
JN_API jn_status jn_reduce(const jn_polygon* p, unsigned times, jn_polygon** out);
JN_API jn_status jn_abrade(const jn_polygon* p, unsigned times, jn_polygon** out);

/* Sequences are comma-separated decimal integers, e.g. "4,6,13". */
JN_API jn_status jn_merle(const char* generators, jn_polygon** out);
JN_API jn_status jn_char_to_semigroup(const char* characteristic, jn_format format, char** report);
JN_API jn_status jn_semigroup_to_char(const char* generators, jn_format format, char** report);
JN_API jn_status jn_bresinsky(const char* generators, jn_format format, char** report);

/* Kuo-Lu tree of a roots document (JSON text). */
JN_API jn_status jn_tree(const char* roots_json, jn_format format, char** report,
                         jn_polygon** polygon);
JN_API jn_status jn_tree_file(const char* path, jn_format format, char** report,
                              jn_polygon** polygon);

JN_API jn_status jn_approximate_root(const jn_poly* f, unsigned p, jn_format format, char** report);

#ifdef __cplusplus
}
#endif

#endif /* JACNEWTON_H */
