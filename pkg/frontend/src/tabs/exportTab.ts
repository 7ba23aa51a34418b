// Export Data tab: pick series, a format, and an optional year window;
// download through the export endpoint or preview inline.

import { api, CatalogEntry, exportUrl } from "../api";

export function initExportTab(
  container: HTMLElement,
  catalog: CatalogEntry[]
): void {
  container.innerHTML = "";

  const picker = document.createElement("div");
  picker.className = "export-picker";
  const boxes: HTMLInputElement[] = [];
  const surveys = [...new Set(catalog.map((e) => e.survey))].sort();
  for (const survey of surveys) {
    const group = document.createElement("fieldset");
    const legend = document.createElement("legend");
    legend.textContent = survey;
    group.appendChild(legend);
    for (const entry of catalog
      .filter((e) => e.survey === survey)
      .sort((a, b) => a.title.localeCompare(b.title))) {
      const label = document.createElement("label");
      label.className = "export-row";
      const box = document.createElement("input");
      box.type = "checkbox";
      box.value = entry.series_id;
      boxes.push(box);
      label.appendChild(box);
      label.appendChild(document.createTextNode(` ${entry.title}`));
      group.appendChild(label);
    }
    picker.appendChild(group);
  }
  container.appendChild(picker);

  const controls = document.createElement("div");
  controls.className = "export-controls";
  controls.innerHTML =
    `<label><input type="radio" name="fmt" value="csv" checked> CSV</label>` +
    `<label><input type="radio" name="fmt" value="json"> JSON</label>` +
    `<label>from <input type="number" class="start" placeholder="first year"></label>` +
    `<label>to <input type="number" class="end" placeholder="last year"></label>`;
  const download = document.createElement("a");
  download.textContent = "Download";
  download.className = "button";
  const preview = document.createElement("button");
  preview.textContent = "Preview";
  controls.appendChild(download);
  controls.appendChild(preview);
  container.appendChild(controls);

  const output = document.createElement("pre");
  output.className = "export-preview";
  container.appendChild(output);

  function currentUrl(): string | null {
    const ids = boxes.filter((b) => b.checked).map((b) => b.value);
    if (!ids.length) return null;
    const format = controls.querySelector<HTMLInputElement>(
      "input[name=fmt]:checked"
    )!.value as "csv" | "json";
    const startText = controls.querySelector<HTMLInputElement>("input.start")!.value;
    const endText = controls.querySelector<HTMLInputElement>("input.end")!.value;
    return exportUrl(
      ids,
      format,
      startText ? Number(startText) : undefined,
      endText ? Number(endText) : undefined
    );
  }

  function sync(): void {
    const url = currentUrl();
    if (url) {
      download.setAttribute("href", url);
      download.setAttribute("download", "");
      download.classList.remove("disabled");
    } else {
      download.removeAttribute("href");
      download.classList.add("disabled");
    }
  }
  container.addEventListener("change", sync);
  sync();

  preview.addEventListener("click", async () => {
    const url = currentUrl();
    if (!url) {
      output.textContent = "select at least one series";
      return;
    }
    try {
      const text = await api.exportText(url);
      const lines = text.split("\n");
      output.textContent =
        lines.slice(0, 25).join("\n") +
        (lines.length > 25 ? `\n… (${lines.length - 25} more lines)` : "");
    } catch (error) {
      output.textContent = String(error);
    }
  });
}
