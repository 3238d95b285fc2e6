"""Writing reports to files, folders and zip archives."""

import os

import flametree

from .Report import file_digest


def is_report_folder_target(target):
    return (
        target == "@memory"
        or target.lower().endswith(".zip")
        or target.endswith(os.sep)
        or os.path.isdir(target)
    )


def write_report(report, target, input_path=None, output_format="json"):
    """Write a report to a file, a folder or a zip archive.

    Parameters
    ----------

    report
      A Report.

    target
      Either a path to a folder (existing, or ending with "/"), a path to a
      zip archive, "@memory" to return the raw data of a zip archive, or a
      plain file path. Folders and archives receive ``report.json``,
      ``report.txt`` and a copy of the input file prefixed with the first
      characters of its digest. A plain file receives the report in
      ``output_format`` ("json" or "text").

    input_path
      Path to the model file the report was computed from.
    """
    if not is_report_folder_target(target):
        content = report.to_json() if output_format == "json" else report.to_text()
        with open(target, "w", encoding="utf-8") as f:
            f.write(content)
        return None
    root = flametree.file_tree(target, replace=True)

    # TRANSFER THE INPUT FILE
    if input_path is not None:
        with open(input_path, "rb") as f:
            file_content = f.read()
        basename = os.path.basename(input_path)
        file_hash = file_digest(content=file_content)[:8]
        root._file("_".join([file_hash, basename])).write(file_content)

    root._file("report.json").write(report.to_json())
    root._file("report.txt").write(report.to_text())

    # returns zip data if target == '@memory'
    return root._close()
