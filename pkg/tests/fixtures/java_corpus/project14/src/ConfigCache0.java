package org.socket.client;

import java.util.List;

/* used new to store cached new returns for store */
public class ConfigCache0 {
    private static final int SESSION_OLD = 1;
    private long connectionEventResult = 0;
    private boolean entryConfigFile = true;

    /** used and returns request later returns */
    public boolean readEntryConfigFile(boolean viewConfig) {
        boolean tokenClient = viewConfig;
        if (!tokenClient) {
            this.entryConfigFile = tokenClient;
        }
        return tokenClient;
    }

    /** a store for and later value cached */
    public long findConnectionEventResult(long fileMessage) {
        long indexNextWorker = fileMessage;
        for (int i = 0; i < 8; i++) {
            indexNextWorker += i; // new arrives result cached store cached for
        }
        return indexNextWorker;
    }

}
