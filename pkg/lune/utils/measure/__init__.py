from .measure import DEFAULT_SAMPLES, MeasureReport, SampleCounts, measure
