#include "ledsig/report.hpp"

// The schema text below is the byte-for-byte content of the files under
// schema/; a test keeps the two in sync.

namespace ledsig {

const std::string& analysis_report_schema_text() {
    static const std::string text = R"json({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "ledger-signal analysis report",
  "type": "object",
  "additionalProperties": false,
  "required": [
    "schema_version",
    "artifact",
    "metadata",
    "grouped_stats",
    "welch",
    "games_howell",
    "burstiness",
    "credit_ratios",
    "anomaly",
    "raw",
    "warnings"
  ],
  "properties": {
    "schema_version": {"type": "string", "enum": ["1"]},
    "artifact": {
      "type": "object",
      "additionalProperties": false,
      "required": ["name", "version"],
      "properties": {
        "name": {"type": "string"},
        "version": {"type": "string"}
      }
    },
    "metadata": {
      "type": "object",
      "additionalProperties": false,
      "required": [
        "inputs",
        "span",
        "n_transactions",
        "n_expenditures",
        "n_accounts",
        "alpha",
        "seed",
        "contamination",
        "n_trees",
        "psi",
        "volume_feature",
        "grains",
        "groupings"
      ],
      "properties": {
        "inputs": {"type": "array", "items": {"type": "string"}},
        "span": {
          "type": "object",
          "additionalProperties": false,
          "required": ["start", "end"],
          "properties": {
            "start": {"type": "string"},
            "end": {"type": "string"}
          }
        },
        "n_transactions": {"type": "integer"},
        "n_expenditures": {"type": "integer"},
        "n_accounts": {"type": "integer"},
        "alpha": {"type": "number"},
        "seed": {"type": "integer"},
        "contamination": {"type": "number"},
        "n_trees": {"type": "integer"},
        "psi": {"type": "integer"},
        "volume_feature": {"type": "boolean"},
        "grains": {
          "type": "array",
          "items": {"type": "string", "enum": ["daily", "weekly", "monthly"]}
        },
        "groupings": {
          "type": "array",
          "items": {"type": "string", "enum": ["three-level", "binary"]}
        }
      }
    },
    "grouped_stats": {
      "type": "object",
      "additionalProperties": false,
      "required": ["three_level", "binary"],
      "properties": {
        "three_level": {
          "type": ["object", "null"],
          "additionalProperties": false,
          "required": ["groups", "omitted"],
          "properties": {
            "groups": {
              "type": "array",
              "items": {
                "type": "object",
                "additionalProperties": false,
                "required": ["group", "n_days", "mean_frequency", "mean_volume"],
                "properties": {
                  "group": {
                    "type": "string",
                    "enum": ["none", "mild", "moderate", "severe", "symptomatic"]
                  },
                  "n_days": {"type": "integer"},
                  "mean_frequency": {"type": "number"},
                  "mean_volume": {"type": "number"}
                }
              }
            },
            "omitted": {"type": "array", "items": {"type": "string"}}
          }
        },
        "binary": {
          "type": ["object", "null"],
          "additionalProperties": false,
          "required": ["groups", "omitted"],
          "properties": {
            "groups": {
              "type": "array",
              "items": {
                "type": "object",
                "additionalProperties": false,
                "required": ["group", "n_days", "mean_frequency", "mean_volume"],
                "properties": {
                  "group": {
                    "type": "string",
                    "enum": ["none", "mild", "moderate", "severe", "symptomatic"]
                  },
                  "n_days": {"type": "integer"},
                  "mean_frequency": {"type": "number"},
                  "mean_volume": {"type": "number"}
                }
              }
            },
            "omitted": {"type": "array", "items": {"type": "string"}}
          }
        }
      }
    },
    "welch": {
      "type": "object",
      "additionalProperties": false,
      "required": ["three_level", "binary"],
      "properties": {
        "three_level": {
          "type": ["object", "null"],
          "additionalProperties": false,
          "required": ["frequency", "volume"],
          "properties": {
            "frequency": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["F", "df1", "df2", "p"],
              "properties": {
                "F": {"type": "number"},
                "df1": {"type": "number"},
                "df2": {"type": "number"},
                "p": {"type": "number"}
              }
            },
            "volume": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["F", "df1", "df2", "p"],
              "properties": {
                "F": {"type": "number"},
                "df1": {"type": "number"},
                "df2": {"type": "number"},
                "p": {"type": "number"}
              }
            }
          }
        },
        "binary": {
          "type": ["object", "null"],
          "additionalProperties": false,
          "required": ["frequency", "volume"],
          "properties": {
            "frequency": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["F", "df1", "df2", "p"],
              "properties": {
                "F": {"type": "number"},
                "df1": {"type": "number"},
                "df2": {"type": "number"},
                "p": {"type": "number"}
              }
            },
            "volume": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["F", "df1", "df2", "p"],
              "properties": {
                "F": {"type": "number"},
                "df1": {"type": "number"},
                "df2": {"type": "number"},
                "p": {"type": "number"}
              }
            }
          }
        }
      }
    },
    "games_howell": {
      "type": "object",
      "additionalProperties": false,
      "required": ["three_level", "binary"],
      "properties": {
        "three_level": {
          "type": ["object", "null"],
          "additionalProperties": false,
          "required": ["frequency", "volume"],
          "properties": {
            "frequency": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["alpha", "pairs"],
              "properties": {
                "alpha": {"type": "number"},
                "pairs": {
                  "type": "array",
                  "items": {
                    "type": "object",
                    "additionalProperties": false,
                    "required": [
                      "group_a",
                      "group_b",
                      "diff",
                      "se",
                      "df",
                      "q",
                      "p",
                      "ci_low",
                      "ci_high",
                      "significant"
                    ],
                    "properties": {
                      "group_a": {"type": "string"},
                      "group_b": {"type": "string"},
                      "diff": {"type": "number"},
                      "se": {"type": "number"},
                      "df": {"type": "number"},
                      "q": {"type": "number"},
                      "p": {"type": "number"},
                      "ci_low": {"type": "number"},
                      "ci_high": {"type": "number"},
                      "significant": {"type": "boolean"}
                    }
                  }
                }
              }
            },
            "volume": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["alpha", "pairs"],
              "properties": {
                "alpha": {"type": "number"},
                "pairs": {
                  "type": "array",
                  "items": {
                    "type": "object",
                    "additionalProperties": false,
                    "required": [
                      "group_a",
                      "group_b",
                      "diff",
                      "se",
                      "df",
                      "q",
                      "p",
                      "ci_low",
                      "ci_high",
                      "significant"
                    ],
                    "properties": {
                      "group_a": {"type": "string"},
                      "group_b": {"type": "string"},
                      "diff": {"type": "number"},
                      "se": {"type": "number"},
                      "df": {"type": "number"},
                      "q": {"type": "number"},
                      "p": {"type": "number"},
                      "ci_low": {"type": "number"},
                      "ci_high": {"type": "number"},
                      "significant": {"type": "boolean"}
                    }
                  }
                }
              }
            }
          }
        },
        "binary": {
          "type": ["object", "null"],
          "additionalProperties": false,
          "required": ["frequency", "volume"],
          "properties": {
            "frequency": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["alpha", "pairs"],
              "properties": {
                "alpha": {"type": "number"},
                "pairs": {
                  "type": "array",
                  "items": {
                    "type": "object",
                    "additionalProperties": false,
                    "required": [
                      "group_a",
                      "group_b",
                      "diff",
                      "se",
                      "df",
                      "q",
                      "p",
                      "ci_low",
                      "ci_high",
                      "significant"
                    ],
                    "properties": {
                      "group_a": {"type": "string"},
                      "group_b": {"type": "string"},
                      "diff": {"type": "number"},
                      "se": {"type": "number"},
                      "df": {"type": "number"},
                      "q": {"type": "number"},
                      "p": {"type": "number"},
                      "ci_low": {"type": "number"},
                      "ci_high": {"type": "number"},
                      "significant": {"type": "boolean"}
                    }
                  }
                }
              }
            },
            "volume": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["alpha", "pairs"],
              "properties": {
                "alpha": {"type": "number"},
                "pairs": {
                  "type": "array",
                  "items": {
                    "type": "object",
                    "additionalProperties": false,
                    "required": [
                      "group_a",
                      "group_b",
                      "diff",
                      "se",
                      "df",
                      "q",
                      "p",
                      "ci_low",
                      "ci_high",
                      "significant"
                    ],
                    "properties": {
                      "group_a": {"type": "string"},
                      "group_b": {"type": "string"},
                      "diff": {"type": "number"},
                      "se": {"type": "number"},
                      "df": {"type": "number"},
                      "q": {"type": "number"},
                      "p": {"type": "number"},
                      "ci_low": {"type": "number"},
                      "ci_high": {"type": "number"},
                      "significant": {"type": "boolean"}
                    }
                  }
                }
              }
            }
          }
        }
      }
    },
    "burstiness": {
      "type": "object",
      "additionalProperties": false,
      "required": ["overall", "by_phase", "per_account"],
      "properties": {
        "overall": {
          "type": "object",
          "additionalProperties": false,
          "required": ["B_D", "B_C"],
          "properties": {
            "B_D": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["B", "tau", "sigma", "n_intervals"],
              "properties": {
                "B": {"type": "number"},
                "tau": {"type": "number"},
                "sigma": {"type": "number"},
                "n_intervals": {"type": "integer"}
              }
            },
            "B_C": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["B", "tau", "sigma", "n_intervals"],
              "properties": {
                "B": {"type": "number"},
                "tau": {"type": "number"},
                "sigma": {"type": "number"},
                "n_intervals": {"type": "integer"}
              }
            }
          }
        },
        "by_phase": {
          "type": "object",
          "additionalProperties": false,
          "required": ["three_level", "binary"],
          "properties": {
            "three_level": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["B_D", "B_C"],
              "properties": {
                "B_D": {
                  "type": "object",
                  "additionalProperties": false,
                  "required": ["phases", "skipped"],
                  "properties": {
                    "phases": {
                      "type": "array",
                      "items": {
                        "type": "object",
                        "additionalProperties": false,
                        "required": ["level", "mean_B", "n_segments"],
                        "properties": {
                          "level": {
                            "type": "string",
                            "enum": ["none", "mild", "moderate", "severe", "symptomatic"]
                          },
                          "mean_B": {"type": "number"},
                          "n_segments": {"type": "integer"}
                        }
                      }
                    },
                    "skipped": {
                      "type": "array",
                      "items": {
                        "type": "object",
                        "additionalProperties": false,
                        "required": ["start", "end", "level", "n_events"],
                        "properties": {
                          "start": {"type": "string"},
                          "end": {"type": "string"},
                          "level": {
                            "type": "string",
                            "enum": ["none", "mild", "moderate", "severe", "symptomatic"]
                          },
                          "n_events": {"type": "integer"}
                        }
                      }
                    }
                  }
                },
                "B_C": {
                  "type": "object",
                  "additionalProperties": false,
                  "required": ["phases", "skipped"],
                  "properties": {
                    "phases": {
                      "type": "array",
                      "items": {
                        "type": "object",
                        "additionalProperties": false,
                        "required": ["level", "mean_B", "n_segments"],
                        "properties": {
                          "level": {
                            "type": "string",
                            "enum": ["none", "mild", "moderate", "severe", "symptomatic"]
                          },
                          "mean_B": {"type": "number"},
                          "n_segments": {"type": "integer"}
                        }
                      }
                    },
                    "skipped": {
                      "type": "array",
                      "items": {
                        "type": "object",
                        "additionalProperties": false,
                        "required": ["start", "end", "level", "n_events"],
                        "properties": {
                          "start": {"type": "string"},
                          "end": {"type": "string"},
                          "level": {
                            "type": "string",
                            "enum": ["none", "mild", "moderate", "severe", "symptomatic"]
                          },
                          "n_events": {"type": "integer"}
                        }
                      }
                    }
                  }
                }
              }
            },
            "binary": {
              "type": ["object", "null"],
              "additionalProperties": false,
              "required": ["B_D", "B_C"],
              "properties": {
                "B_D": {
                  "type": "object",
                  "additionalProperties": false,
                  "required": ["phases", "skipped"],
                  "properties": {
                    "phases": {
                      "type": "array",
                      "items": {
                        "type": "object",
                        "additionalProperties": false,
                        "required": ["level", "mean_B", "n_segments"],
                        "properties": {
                          "level": {
                            "type": "string",
                            "enum": ["none", "mild", "moderate", "severe", "symptomatic"]
                          },
                          "mean_B": {"type": "number"},
                          "n_segments": {"type": "integer"}
                        }
                      }
                    },
                    "skipped": {
                      "type": "array",
                      "items": {
                        "type": "object",
                        "additionalProperties": false,
                        "required": ["start", "end", "level", "n_events"],
                        "properties": {
                          "start": {"type": "string"},
                          "end": {"type": "string"},
                          "level": {
                            "type": "string",
                            "enum": ["none", "mild", "moderate", "severe", "symptomatic"]
                          },
                          "n_events": {"type": "integer"}
                        }
                      }
                    }
                  }
                },
                "B_C": {
                  "type": "object",
                  "additionalProperties": false,
                  "required": ["phases", "skipped"],
                  "properties": {
                    "phases": {
                      "type": "array",
                      "items": {
                        "type": "object",
                        "additionalProperties": false,
                        "required": ["level", "mean_B", "n_segments"],
                        "properties": {
                          "level": {
                            "type": "string",
                            "enum": ["none", "mild", "moderate", "severe", "symptomatic"]
                          },
                          "mean_B": {"type": "number"},
                          "n_segments": {"type": "integer"}
                        }
                      }
                    },
                    "skipped": {
                      "type": "array",
                      "items": {
                        "type": "object",
                        "additionalProperties": false,
                        "required": ["start", "end", "level", "n_events"],
                        "properties": {
                          "start": {"type": "string"},
                          "end": {"type": "string"},
                          "level": {
                            "type": "string",
                            "enum": ["none", "mild", "moderate", "severe", "symptomatic"]
                          },
                          "n_events": {"type": "integer"}
                        }
                      }
                    }
                  }
                }
              }
            }
          }
        },
        "per_account": {
          "type": ["array", "null"],
          "items": {
            "type": "object",
            "additionalProperties": false,
            "required": ["account_id", "B_D"],
            "properties": {
              "account_id": {"type": "string"},
              "B_D": {
                "type": ["object", "null"],
                "additionalProperties": false,
                "required": ["B", "tau", "sigma", "n_intervals"],
                "properties": {
                  "B": {"type": "number"},
                  "tau": {"type": "number"},
                  "sigma": {"type": "number"},
                  "n_intervals": {"type": "integer"}
                }
              }
            }
          }
        }
      }
    },
    "credit_ratios": {
      "type": "object",
      "additionalProperties": false,
      "required": ["count_based", "volume_based"],
      "properties": {
        "count_based": {
          "type": "array",
          "items": {
            "type": "object",
            "additionalProperties": false,
            "required": ["month", "ratio"],
            "properties": {
              "month": {"type": "string"},
              "ratio": {"type": "number"}
            }
          }
        },
        "volume_based": {
          "type": "array",
          "items": {
            "type": "object",
            "additionalProperties": false,
            "required": ["month", "ratio"],
            "properties": {
              "month": {"type": "string"},
              "ratio": {"type": "number"}
            }
          }
        }
      }
    },
    "anomaly": {
      "type": ["object", "null"],
      "additionalProperties": false,
      "required": [
        "contamination",
        "n_trees",
        "psi",
        "seed",
        "volume_feature",
        "threshold",
        "n_weeks",
        "periods"
      ],
      "properties": {
        "contamination": {"type": "number"},
        "n_trees": {"type": "integer"},
        "psi": {"type": "integer"},
        "seed": {"type": "integer"},
        "volume_feature": {"type": "boolean"},
        "threshold": {"type": "number"},
        "n_weeks": {"type": "integer"},
        "periods": {
          "type": "array",
          "items": {
            "type": "object",
            "additionalProperties": false,
            "required": ["period_start", "score", "flagged"],
            "properties": {
              "period_start": {"type": "string"},
              "score": {"type": "number"},
              "flagged": {"type": "boolean"}
            }
          }
        }
      }
    },
    "raw": {
      "type": ["object", "null"],
      "additionalProperties": false,
      "required": ["total_expenditure", "accounts"],
      "properties": {
        "total_expenditure": {"type": "number"},
        "accounts": {
          "type": "array",
          "items": {
            "type": "object",
            "additionalProperties": false,
            "required": ["account_id", "min_amount", "max_amount"],
            "properties": {
              "account_id": {"type": "string"},
              "min_amount": {"type": "number"},
              "max_amount": {"type": "number"}
            }
          }
        }
      }
    },
    "warnings": {"type": "array", "items": {"type": "string"}}
  }
}
)json";
    return text;
}

const std::string& anomaly_report_schema_text() {
    static const std::string text = R"json({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "ledger-signal anomaly report",
  "type": "object",
  "additionalProperties": false,
  "required": ["schema_version", "artifact", "metadata", "threshold", "periods", "sweep"],
  "properties": {
    "schema_version": {"type": "string", "enum": ["1"]},
    "artifact": {
      "type": "object",
      "additionalProperties": false,
      "required": ["name", "version"],
      "properties": {
        "name": {"type": "string"},
        "version": {"type": "string"}
      }
    },
    "metadata": {
      "type": "object",
      "additionalProperties": false,
      "required": [
        "input",
        "n_weeks",
        "seed",
        "n_trees",
        "psi",
        "contamination",
        "volume_feature"
      ],
      "properties": {
        "input": {"type": "string"},
        "n_weeks": {"type": "integer"},
        "seed": {"type": "integer"},
        "n_trees": {"type": "integer"},
        "psi": {"type": "integer"},
        "contamination": {"type": "number"},
        "volume_feature": {"type": "boolean"}
      }
    },
    "threshold": {"type": "number"},
    "periods": {
      "type": "array",
      "items": {
        "type": "object",
        "additionalProperties": false,
        "required": ["period_start", "score", "flagged"],
        "properties": {
          "period_start": {"type": "string"},
          "score": {"type": "number"},
          "flagged": {"type": "boolean"}
        }
      }
    },
    "sweep": {
      "type": ["array", "null"],
      "items": {
        "type": "object",
        "additionalProperties": false,
        "required": ["contamination", "threshold", "flagged_periods"],
        "properties": {
          "contamination": {"type": "number"},
          "threshold": {"type": "number"},
          "flagged_periods": {"type": "array", "items": {"type": "string"}}
        }
      }
    }
  }
}
)json";
    return text;
}

} // namespace ledsig
