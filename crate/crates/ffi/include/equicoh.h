#ifndef EQUICOH_H
#define EQUICOH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every entry point.
 */
typedef enum EqStatus {
  /**
   * The call succeeded.
   */
  EqOk = 0,
  /**
   * A required pointer argument was null.
   */
  EqNullPointer = 1,
  /**
   * An argument could not be parsed or validated.
   */
  EqInvalidArgument = 2,
  /**
   * The engine rejected the request.
   */
  EqEngineError = 3,
} EqStatus;

/**
 * Opaque handle to a pure Sullivan model.
 */
typedef struct EqModel EqModel;

/**
 * Opaque handle to a presented graded ring.
 */
typedef struct EqPresentation EqPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the message for the most recent failure on this thread. The
 * pointer stays valid until the next failing call on the same thread;
 * do not free it.
 */
const char *eq_last_error_message(void);

/**
 * Releases a string returned by this library.
 */
void eq_string_free(char *s);

/**
 * Builds the presented cohomology ring for a Grassmannian case string
 * such as "n=1,k=1,a=0,b=0,oriented,two-sided".
 */
enum EqStatus eq_presentation_for_case(const char *case_, struct EqPresentation **out);

/**
 * Parses a presentation document (JSON) into a handle.
 */
enum EqStatus eq_presentation_from_json(const char *json, struct EqPresentation **out);

/**
 * Releases a presentation handle.
 */
void eq_presentation_free(struct EqPresentation *p);

/**
 * Writes the dimensions of the presented ring in degrees 0..=max_degree
 * into the caller's buffer, which must hold max_degree + 1 entries.
 */
enum EqStatus eq_presentation_hilbert(const struct EqPresentation *p,
                                      uint32_t max_degree,
                                      uint64_t *dims);

/**
 * Returns the Hilbert table of the presented ring as a JSON document.
 */
enum EqStatus eq_presentation_hilbert_json(const struct EqPresentation *p,
                                           uint32_t max_degree,
                                           char **out);

/**
 * Builds the Sullivan model for a Grassmannian case string.
 */
enum EqStatus eq_model_for_case(const char *case_, struct EqModel **out);

/**
 * Parses a model document (JSON) into a handle.
 */
enum EqStatus eq_model_from_json(const char *json, struct EqModel **out);

/**
 * Releases a model handle.
 */
void eq_model_free(struct EqModel *m);

/**
 * Returns the model's cohomology as a JSON document; pass a nonzero
 * `representatives` flag to include representative cocycles.
 */
enum EqStatus eq_model_cohomology_json(const struct EqModel *m,
                                       uint32_t max_degree,
                                       int32_t representatives,
                                       char **out);

/**
 * Runs the verification matching the case's equivariance. Writes 1 to
 * `pass` when every table comparison agrees and 0 otherwise; the full
 * report is returned as JSON when `report` is non-null. A negative
 * `max_degree` selects the case's default cutoff.
 */
enum EqStatus eq_verify_case(const char *case_, int64_t max_degree, int32_t *pass, char **report);

/**
 * Returns classifying-ring data for a group name such as "SO(7)" as a
 * JSON document.
 */
enum EqStatus eq_catalog_json(const char *group, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQUICOH_H */
