// Admin tab: store freshness, ingest audit log, and a manual ingest
// trigger.

import { api, ApiError } from "../api";

export function initAdminTab(container: HTMLElement): { refresh(): void } {
  container.innerHTML = "";

  const card = document.createElement("div");
  card.className = "status-card";
  container.appendChild(card);

  const actions = document.createElement("div");
  actions.className = "admin-actions";
  const ingestButton = document.createElement("button");
  ingestButton.textContent = "Run ingest";
  const note = document.createElement("span");
  note.className = "admin-note";
  actions.appendChild(ingestButton);
  actions.appendChild(note);
  container.appendChild(actions);

  const logWrap = document.createElement("div");
  container.appendChild(logWrap);

  async function refresh(): Promise<void> {
    try {
      const body = await api.status();
      const status = body.status;
      card.innerHTML = "";
      const badge = document.createElement("span");
      badge.className = `status-badge status-${status.color.toLowerCase()}`;
      badge.textContent = status.color;
      card.appendChild(badge);
      const text = document.createElement("span");
      text.textContent =
        ` ${status.series_count} series, ${status.record_count.toLocaleString("en-US")} records` +
        ` · last ingest ${status.last_ingest ?? "never"}` +
        ` · version ${status.app_version}`;
      card.appendChild(text);

      logWrap.innerHTML = "<h3>Ingest log</h3>";
      const table = document.createElement("table");
      table.className = "log-table";
      table.innerHTML =
        "<thead><tr><th>started</th><th>outcome</th><th>series</th>" +
        "<th>records</th><th>duration</th><th>detail</th></tr></thead>";
      const tbody = document.createElement("tbody");
      for (const row of body.log) {
        const tr = document.createElement("tr");
        const cells = [
          row.started_at.replace("T", " ").slice(0, 19),
          row.outcome,
          String(row.series_count),
          String(row.record_count),
          `${row.duration.toFixed(2)}s`,
          row.detail,
        ];
        for (const cell of cells) {
          const td = document.createElement("td");
          td.textContent = cell;
          tr.appendChild(td);
        }
        tbody.appendChild(tr);
      }
      table.appendChild(tbody);
      logWrap.appendChild(table);
      if (!body.log.length) {
        logWrap.appendChild(document.createTextNode("no runs recorded"));
      }
    } catch (error) {
      card.textContent = `status unavailable: ${(error as Error).message}`;
    }
  }

  ingestButton.addEventListener("click", async () => {
    ingestButton.disabled = true;
    note.textContent = "running…";
    try {
      await api.ingest();
      note.textContent = "done";
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        note.textContent = "an ingest is already running";
      } else {
        note.textContent = (error as Error).message;
      }
    } finally {
      ingestButton.disabled = false;
      void refresh();
    }
  });

  void refresh();
  return { refresh: () => void refresh() };
}
