public class Unfinished {
    // flips the enabled flag on the widget
    public void flipWidgetEnabledFlag() {
        widgetEnabled = !widgetEnabled;
    }

    // writes the widget state into the log sink
    public void writeWidgetStateLog() {
        log.append(widgetEnabled);

